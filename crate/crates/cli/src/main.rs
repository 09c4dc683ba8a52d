fn main() {
    std::process::exit(anstab_cli::run(std::env::args_os()));
}

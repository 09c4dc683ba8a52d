//! Command-line front end for `anstab`.
//!
//! ```text
//! anstab gen-table --algo greedy --counts 6,4,3,2 --symbols r,b,g,y -o t.json
//! anstab encode -i msg.txt -o msg.ans --table t.json --B 2 --M-mult 4
//! anstab decode -i msg.ans -o msg.out --table t.json
//! anstab analyze --table t.json --metric discrepancy --N 150
//! anstab samples --kind random-zipf --seed 1 --count 100
//! anstab profile --count 100 --seed 0 -o curves.csv
//! ```
//!
//! Exit codes: 0 success, 1 domain or I/O error, 2 usage error.

pub mod analyze;
pub mod profile;
pub mod samples;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anstab::allocators::generate;
use anstab::{Algorithm, Allocation, FrequencyTable, Message, StreamConfig, StreamParams, TableFile};
use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analyze::{Metric, MetricOptions};
use crate::samples::{SampleKind, SampleSpec, SampleStream, PRNG};

/// Bad flag combination; reported with exit code 2.
#[derive(Debug)]
pub struct Usage(pub String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> anyhow::Result<T> {
    Err(Usage(msg.into()).into())
}

#[derive(Debug, Parser)]
#[command(name = "anstab", version, about = "Symbol tables and codecs for asymmetric numeral systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a symbol table and write it as JSON.
    GenTable(GenTableArgs),
    /// Stream-encode a message file.
    Encode(EncodeArgs),
    /// Decode a file written by `encode`.
    Decode(DecodeArgs),
    /// Compute a metric for tables.
    Analyze(AnalyzeArgs),
    /// Print sample frequency tables.
    Samples(SamplesArgs),
    /// Performance profiles of entropy loss over random corpora.
    Profile(ProfileArgs),
}

#[derive(Debug, Args)]
struct SourceArgs {
    /// Comma-separated symbol counts.
    #[arg(long, value_delimiter = ',', conflicts_with = "sample")]
    counts: Option<Vec<u64>>,
    /// Comma-separated symbol names matching `--counts` (default s0, s1, ...).
    #[arg(long, value_delimiter = ',', requires = "counts")]
    symbols: Option<Vec<String>>,
    /// Use a sample table instead of `--counts`.
    #[arg(long)]
    sample: Option<SampleKind>,
    /// Seed for random sample kinds.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct GenTableArgs {
    #[arg(long, value_parser = parse_algorithm)]
    algo: Algorithm,
    #[command(flatten)]
    source: SourceArgs,
    /// Digit base used by dube-yokoo.
    #[arg(long = "B", default_value_t = 2)]
    base: u32,
    /// Round limit for dube-yokoo.
    #[arg(long, default_value_t = 100)]
    max_iters: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EncodeArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(short, long)]
    output: PathBuf,
    #[arg(long)]
    table: PathBuf,
    #[arg(long = "B", default_value_t = 2)]
    base: u64,
    /// Interval start `M = K·Q`.
    #[arg(long = "M-mult", default_value_t = 1)]
    mult: u64,
    /// Symbols are whitespace-separated tokens instead of characters.
    #[arg(long)]
    tokens: bool,
}

#[derive(Debug, Args)]
struct DecodeArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long)]
    table: PathBuf,
    /// Join decoded symbols with single spaces.
    #[arg(long)]
    tokens: bool,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// Table JSON files.
    #[arg(long, value_delimiter = ',', conflicts_with = "sample")]
    table: Vec<PathBuf>,
    /// Sample kinds, or `all` for the fixed evaluation samples.
    #[arg(long, value_delimiter = ',')]
    sample: Vec<String>,
    /// Generators applied to `--sample`, or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    algo: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    metric: Metric,
    /// Prefix length for discrepancy and kl (default Q).
    #[arg(long = "N")]
    prefix: Option<u64>,
    /// Word length for expected-bits.
    #[arg(long, default_value_t = 4)]
    m: u32,
    /// Initial state for expected-bits.
    #[arg(long, default_value_t = 1000)]
    n: u64,
    /// Probability threshold `a/b` for relative-excess.
    #[arg(long)]
    p: Option<String>,
    #[arg(long = "B", default_value_t = 2)]
    base: u64,
    /// Interval multipliers `K` for the stream metrics.
    #[arg(long = "M-mult", value_delimiter = ',', default_value = "1")]
    mult: Vec<u64>,
    #[arg(long, default_value_t = 100)]
    max_iters: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SamplesArgs {
    #[arg(long)]
    kind: SampleKind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Alphabet size of random samples.
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 1.0)]
    zipf_exponent: f64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct ProfileArgs {
    /// Samples per random kind.
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "B", default_value_t = 2)]
    base: u32,
    #[arg(long = "M-mult", value_delimiter = ',', default_value = "1")]
    mult: Vec<u64>,
    #[arg(long, value_delimiter = ',', default_value = "all")]
    algo: Vec<String>,
    #[arg(long, default_value_t = 1.0)]
    zipf_exponent: f64,
    #[arg(long, default_value_t = 100)]
    max_iters: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Also write per-sample quotients as CSV.
    #[arg(long)]
    raw: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

impl clap::ValueEnum for SampleKind {
    fn value_variants<'a>() -> &'a [Self] {
        &SampleKind::ALL
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.name()))
    }
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: anstab::Error| e.to_string())
}

fn parse_algorithms(names: &[String]) -> anyhow::Result<Vec<Algorithm>> {
    if names.iter().any(|n| n == "all") {
        return Ok(Algorithm::ALL.to_vec());
    }
    names
        .iter()
        .map(|n| parse_algorithm(n).or_else(|e| usage(e)))
        .collect()
}

fn emit(output: Option<&Path>, text: &str, out: &mut dyn Write) -> anyhow::Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(Into::into),
    }
}

fn read_table(path: &Path) -> anyhow::Result<(TableFile, Allocation)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = TableFile::from_json(&text)?;
    let alloc = file.to_allocation()?;
    Ok((file, alloc))
}

fn source_table(src: &SourceArgs) -> anyhow::Result<FrequencyTable> {
    match (&src.counts, src.sample) {
        (Some(counts), _) => Ok(match &src.symbols {
            Some(symbols) => {
                if symbols.len() != counts.len() {
                    return usage(format!(
                        "{} symbols given for {} counts",
                        symbols.len(),
                        counts.len()
                    ));
                }
                FrequencyTable::from_parts(symbols, counts)?
            }
            None => FrequencyTable::from_counts(counts)?,
        }),
        (None, Some(kind)) => {
            let mut stream = SampleStream::new(SampleSpec::new(kind, src.seed));
            Ok(stream.next().expect("sample streams are endless").table)
        }
        (None, None) => usage("one of --counts or --sample is required"),
    }
}

fn gen_table(args: &GenTableArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    let ft = source_table(&args.source)?;
    let params = StreamParams {
        base: args.base,
        max_iters: args.max_iters,
    };
    let alloc = generate(args.algo, &ft, params)?;
    let mut json = TableFile::from_allocation(&alloc, Some(args.algo.name())).to_json();
    json.push('\n');
    emit(args.output.as_deref(), &json, out)
}

fn split_message(text: &str, tokens: bool) -> Vec<String> {
    if tokens {
        text.split_whitespace().map(str::to_string).collect()
    } else {
        text.chars().map(String::from).collect()
    }
}

fn encode(args: &EncodeArgs) -> anyhow::Result<()> {
    let (_, alloc) = read_table(&args.table)?;
    let text = fs::read_to_string(&args.input)
        .with_context(|| format!("reading {}", args.input.display()))?;
    let word = split_message(&text, args.tokens);
    let start = args
        .mult
        .checked_mul(alloc.period())
        .ok_or(anstab::Error::Overflow("K·Q"))?;
    let cfg = StreamConfig::new(&alloc, args.base, start)?;
    let msg = Message::encode(&cfg, &word)?;
    fs::write(&args.output, msg.to_bytes())
        .with_context(|| format!("writing {}", args.output.display()))
}

fn decode(args: &DecodeArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    let (_, alloc) = read_table(&args.table)?;
    let bytes = fs::read(&args.input).with_context(|| format!("reading {}", args.input.display()))?;
    let msg = Message::from_bytes(&bytes)?;
    let word = msg.decode(&alloc)?;
    let text = word.join(if args.tokens { " " } else { "" });
    emit(args.output.as_deref(), &text, out)
}

fn analyze(args: &AnalyzeArgs) -> anyhow::Result<String> {
    let opts = MetricOptions {
        prefix: args.prefix,
        m: args.m,
        n: args.n,
        p: match &args.p {
            Some(p) => Some(p.parse().or_else(|_| usage(format!("cannot parse probability `{p}`")))?),
            None => None,
        },
        base: args.base,
        mults: args.mult.clone(),
    };
    let mut inputs = Vec::new();
    if !args.table.is_empty() {
        for path in &args.table {
            let (file, alloc) = read_table(path)?;
            let name = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            inputs.push(analyze::Input {
                sample: name,
                algorithm: file.algorithm.clone(),
                alloc,
            });
        }
    } else if !args.sample.is_empty() {
        let kinds: Vec<SampleKind> = if args.sample.iter().any(|s| s == "all") {
            SampleKind::FIXED.to_vec()
        } else {
            args.sample
                .iter()
                .map(|s| s.parse().or_else(|e: String| usage(e)))
                .collect::<anyhow::Result<_>>()?
        };
        let algs = parse_algorithms(&args.algo)?;
        let params = StreamParams {
            base: u32::try_from(args.base).map_err(|_| anstab::Error::Overflow("base"))?,
            max_iters: args.max_iters,
        };
        for kind in kinds {
            let sample = SampleStream::new(SampleSpec::new(kind, args.seed))
                .next()
                .expect("sample streams are endless");
            for &alg in &algs {
                inputs.push(analyze::Input {
                    sample: sample.name.clone(),
                    algorithm: Some(alg.name().to_string()),
                    alloc: generate(alg, &sample.table, params)?,
                });
            }
        }
    } else {
        return usage("one of --table or --sample is required");
    }
    let records = analyze::run_metric(args.metric, &inputs, &opts)?;
    Ok(serde_json::to_string_pretty(&records)? + "\n")
}

#[derive(Serialize)]
struct SampleRecord<'a> {
    name: &'a str,
    symbols: &'a [String],
    counts: &'a [u64],
}

#[derive(Serialize)]
struct SamplesOutput<'a> {
    prng: &'static str,
    spec: &'a SampleSpec,
    samples: Vec<SampleRecord<'a>>,
}

fn samples(args: &SamplesArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    if args.n == 0 {
        return usage("--n must be positive");
    }
    let mut spec = SampleSpec::new(args.kind, args.seed);
    spec.n = args.n;
    spec.zipf_exponent = args.zipf_exponent;
    let drawn = samples::generate_samples(&spec, args.count);
    let output = SamplesOutput {
        prng: PRNG,
        spec: &spec,
        samples: drawn
            .iter()
            .map(|s| SampleRecord {
                name: &s.name,
                symbols: s.table.symbols(),
                counts: s.table.counts(),
            })
            .collect(),
    };
    let mut json = serde_json::to_string_pretty(&output)?;
    json.push('\n');
    emit(args.output.as_deref(), &json, out)
}

fn profile(args: &ProfileArgs, out: &mut dyn Write) -> anyhow::Result<()> {
    if args.count == 0 {
        return usage("--count must be positive");
    }
    let cfg = profile::ProfileConfig {
        count: args.count,
        seed: args.seed,
        base: args.base,
        mults: args.mult.clone(),
        algorithms: parse_algorithms(&args.algo)?,
        zipf_exponent: args.zipf_exponent,
        max_iters: args.max_iters,
    };
    let report = with_threads(|| profile::profile(&cfg))?;
    if let Some(raw) = &args.raw {
        fs::write(raw, report.quotients_csv()).with_context(|| format!("writing {}", raw.display()))?;
    }
    let text = match args.format {
        Format::Csv => report.curves_csv(),
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
    };
    emit(args.output.as_deref(), &text, out)
}

/// Runs `f` on a pool capped by `ANS_THREADS` when it is set.
pub fn with_threads<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    let threads = std::env::var("ANS_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0);
    match threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        None => f(),
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<()> {
    match &cli.command {
        Command::GenTable(a) => gen_table(a, out),
        Command::Encode(a) => encode(a),
        Command::Decode(a) => decode(a, out),
        Command::Analyze(a) => {
            let text = with_threads(|| analyze(a))?;
            emit(a.output.as_deref(), &text, out)
        }
        Command::Samples(a) => samples(a, out),
        Command::Profile(a) => profile(a, out),
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code. Normal output goes to `out`, diagnostics to `err`.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = write!(err, "{e}");
            return if code == 0 { 0 } else { 2 };
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                2
            } else {
                1
            }
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

use std::hint::black_box;

use anstab::analysis::{invariant_measure, max_discrepancy, transition_matrix};
use anstab::tans::{self, CodecState};
use anstab::{generate, Algorithm, StreamConfig, StreamParams, StreamState};
use anstab_bench::{fibonacci, linear, word};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn generators(c: &mut Criterion) {
    let mut g = c.benchmark_group("generate");
    for (name, ft) in [("linear", linear()), ("fibonacci", fibonacci())] {
        for alg in Algorithm::ALL {
            g.bench_with_input(BenchmarkId::new(alg.name(), name), &ft, |b, ft| {
                b.iter(|| generate(alg, black_box(ft), StreamParams::default()).unwrap())
            });
        }
    }
    g.finish();
}

fn discrepancy(c: &mut Criterion) {
    let ft = fibonacci();
    let a = generate(Algorithm::Greedy, &ft, StreamParams::default()).unwrap();
    c.bench_function("max_discrepancy/fibonacci/10Q", |b| {
        b.iter(|| max_discrepancy(black_box(&a), 10 * a.period()))
    });
}

fn codecs(c: &mut Criterion) {
    let ft = fibonacci();
    let a = generate(Algorithm::Greedy, &ft, StreamParams::default()).unwrap();
    let idx = word(ft.len(), 1024);
    let names: Vec<&str> = idx.iter().map(|&x| ft.symbol(x)).collect();

    let mut g = c.benchmark_group("codec");
    g.bench_function("tabled_encode/1024", |b| {
        b.iter(|| tans::encode_word(&a, black_box(&names), &CodecState::from(0u64)).unwrap())
    });
    let enc = tans::encode_word(&a, &names, &CodecState::from(0u64)).unwrap();
    g.bench_function("tabled_decode/1024", |b| {
        b.iter(|| tans::decode_word(&a, black_box(&enc), names.len()))
    });
    for k in [1u64, 8] {
        let cfg = StreamConfig::new(&a, 2, k * a.period()).unwrap();
        g.bench_function(format!("stream_roundtrip/1024/K={k}"), |b| {
            b.iter(|| {
                let mut st = StreamState::new(cfg.start());
                for &x in black_box(&idx) {
                    cfg.push_index(x, &mut st).unwrap();
                }
                cfg.pop_word(&mut st, idx.len()).unwrap().len()
            })
        });
    }
    g.finish();
}

fn stream_analysis(c: &mut Criterion) {
    let ft = fibonacci();
    let a = generate(Algorithm::Greedy, &ft, StreamParams::default()).unwrap();
    let mut g = c.benchmark_group("invariant_measure");
    g.sample_size(10);
    for k in [1u64, 4] {
        let model = transition_matrix(&StreamConfig::new(&a, 2, k * a.period()).unwrap());
        g.bench_function(format!("fibonacci/K={k}"), |b| {
            b.iter(|| invariant_measure(black_box(&model)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, generators, discrepancy, codecs, stream_analysis);
criterion_main!(benches);

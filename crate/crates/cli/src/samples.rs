//! Sample frequency tables: the five fixed evaluation samples and seeded
//! random corpora.

use std::fmt;
use std::str::FromStr;

use anstab::FrequencyTable;
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Name of the generator behind every random corpus.
pub const PRNG: &str = "ChaCha8Rng";

pub const LINEAR: [u64; 8] = [1, 2, 3, 4, 5, 6, 7, 8];
pub const FIBONACCI: [u64; 8] = [1, 1, 2, 3, 5, 8, 13, 21];
pub const UNIFORM: [u64; 8] = [5, 6, 10, 10, 12, 17, 17, 18];
pub const ZIPF: [u64; 8] = [1, 1, 1, 1, 2, 5, 5, 14];
pub const ALPHABET: [u64; 26] = [
    82, 15, 28, 43, 127, 22, 20, 61, 70, 2, 8, 40, 24, 67, 75, 19, 1, 60, 63, 91, 28, 10, 24, 2,
    20, 1,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SampleKind {
    Linear,
    Fibonacci,
    UniformTable2,
    ZipfTable2,
    Alphabet,
    RandomUniform,
    RandomZipf,
}

impl SampleKind {
    pub const ALL: [SampleKind; 7] = [
        SampleKind::Linear,
        SampleKind::Fibonacci,
        SampleKind::UniformTable2,
        SampleKind::ZipfTable2,
        SampleKind::Alphabet,
        SampleKind::RandomUniform,
        SampleKind::RandomZipf,
    ];

    pub const FIXED: [SampleKind; 5] = [
        SampleKind::Linear,
        SampleKind::Fibonacci,
        SampleKind::UniformTable2,
        SampleKind::ZipfTable2,
        SampleKind::Alphabet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SampleKind::Linear => "linear",
            SampleKind::Fibonacci => "fibonacci",
            SampleKind::UniformTable2 => "uniform-fixed_samples",
            SampleKind::ZipfTable2 => "zipf-fixed_samples",
            SampleKind::Alphabet => "alphabet",
            SampleKind::RandomUniform => "random-uniform",
            SampleKind::RandomZipf => "random-zipf",
        }
    }

    pub fn is_random(self) -> bool {
        matches!(self, SampleKind::RandomUniform | SampleKind::RandomZipf)
    }

    fn stream(self) -> u64 {
        match self {
            SampleKind::RandomZipf => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for SampleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SampleKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        SampleKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown sample kind `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleSpec {
    pub kind: SampleKind,
    pub seed: u64,
    /// Alphabet size of random samples.
    pub n: usize,
    /// Inclusive count range of random samples.
    pub bounds: (u64, u64),
    pub zipf_exponent: f64,
}

impl SampleSpec {
    pub fn new(kind: SampleKind, seed: u64) -> Self {
        SampleSpec {
            kind,
            seed,
            n: 8,
            bounds: (1, 20),
            zipf_exponent: 1.0,
        }
    }
}

/// A named frequency table.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub name: String,
    pub table: FrequencyTable,
}

fn fixed_counts(kind: SampleKind) -> Option<&'static [u64]> {
    match kind {
        SampleKind::Linear => Some(&LINEAR),
        SampleKind::Fibonacci => Some(&FIBONACCI),
        SampleKind::UniformTable2 => Some(&UNIFORM),
        SampleKind::ZipfTable2 => Some(&ZIPF),
        SampleKind::Alphabet => Some(&ALPHABET),
        _ => None,
    }
}

fn symbol_names(kind: SampleKind, len: usize) -> Vec<String> {
    if kind == SampleKind::Alphabet {
        (b'a'..=b'z').take(len).map(|c| (c as char).to_string()).collect()
    } else {
        (0..len).map(|i| format!("s{i}")).collect()
    }
}

/// The fixed evaluation sample of `kind`, or `None` for random kinds.
pub fn fixed_sample(kind: SampleKind) -> Option<Sample> {
    let counts = fixed_counts(kind)?;
    let table = FrequencyTable::from_parts(&symbol_names(kind, counts.len()), counts)
        .expect("fixed samples are valid");
    Some(Sample {
        name: kind.name().to_string(),
        table,
    })
}

/// Endless deterministic sequence of samples for one spec. Fixed kinds
/// repeat their table.
pub struct SampleStream {
    spec: SampleSpec,
    rng: ChaCha8Rng,
    drawn: usize,
    zipf: Option<WeightedIndex<f64>>,
}

impl SampleStream {
    pub fn new(spec: SampleSpec) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        rng.set_stream(spec.kind.stream());
        let (lo, hi) = spec.bounds;
        let zipf = (spec.kind == SampleKind::RandomZipf).then(|| {
            WeightedIndex::new((1..=hi - lo + 1).map(|k| (k as f64).powf(-spec.zipf_exponent)))
                .expect("positive weights")
        });
        SampleStream {
            spec,
            rng,
            drawn: 0,
            zipf,
        }
    }

    pub fn spec(&self) -> &SampleSpec {
        &self.spec
    }
}

impl Iterator for SampleStream {
    type Item = Sample;

    fn next(&mut self) -> Option<Sample> {
        let index = self.drawn;
        self.drawn += 1;
        if let Some(sample) = fixed_sample(self.spec.kind) {
            return Some(sample);
        }
        let (lo, hi) = self.spec.bounds;
        let counts: Vec<u64> = (0..self.spec.n)
            .map(|_| match &self.zipf {
                Some(w) => lo + w.sample(&mut self.rng) as u64,
                None => self.rng.random_range(lo..=hi),
            })
            .collect();
        let table = FrequencyTable::from_parts(&symbol_names(self.spec.kind, counts.len()), &counts)
            .expect("counts are positive");
        Some(Sample {
            name: format!("{}-{}-{index}", self.spec.kind, self.spec.seed),
            table,
        })
    }
}

/// The first `count` samples of `spec`.
pub fn generate_samples(spec: &SampleSpec, count: usize) -> Vec<Sample> {
    SampleStream::new(spec.clone()).take(count).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_kinds_match_the_evaluation_samples() {
        let lin = &generate_samples(&SampleSpec::new(SampleKind::Linear, 0), 1)[0];
        assert_eq!(lin.table.counts(), &[1, 2, 3, 4, 5, 6, 7, 8]);
        let fib = &generate_samples(&SampleSpec::new(SampleKind::Fibonacci, 0), 1)[0];
        assert_eq!(fib.table.counts(), &[1, 1, 2, 3, 5, 8, 13, 21]);
        let abc = fixed_sample(SampleKind::Alphabet).unwrap();
        assert_eq!(abc.table.len(), 26);
        assert_eq!(abc.table.symbol(25), "z");
        assert_eq!(abc.table.period(), 1003);
        assert!(fixed_sample(SampleKind::RandomZipf).is_none());
    }

    #[test]
    fn random_samples_are_seeded() {
        for kind in [SampleKind::RandomUniform, SampleKind::RandomZipf] {
            let spec = SampleSpec::new(kind, 7);
            let a = generate_samples(&spec, 100);
            assert_eq!(a, generate_samples(&spec, 100));
            assert_ne!(a, generate_samples(&SampleSpec::new(kind, 8), 100));
            for s in &a {
                assert_eq!(s.table.len(), 8);
                assert!(s.table.counts().iter().all(|&c| (1..=20).contains(&c)));
            }
        }
    }

    #[test]
    fn zipf_favours_small_counts() {
        let zipf = generate_samples(&SampleSpec::new(SampleKind::RandomZipf, 1), 200);
        let uni = generate_samples(&SampleSpec::new(SampleKind::RandomUniform, 1), 200);
        let mean = |v: &[Sample]| {
            v.iter().flat_map(|s| s.table.counts()).sum::<u64>() as f64 / (8 * v.len()) as f64
        };
        assert!(mean(&zipf) < 6.0);
        assert!((mean(&uni) - 10.5).abs() < 1.0);
    }
}

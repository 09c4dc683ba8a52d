//! Metric records for `anstab analyze`.

use anstab::allocators::verify_theorem_criteria;
use anstab::analysis::{
    eigen_gap, entropy_loss, expected_bits, expected_word_length, invariant_measure,
    kl_divergence, max_discrepancy, relative_excess, shannon_entropy, transition_matrix,
};
use anstab::tans::CodecState;
use anstab::{Allocation, Error, StreamConfig};
use clap::ValueEnum;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Metric {
    /// Exact maximum of `|N·f(s) − n(s,N)|` over prefixes up to `--N`.
    Discrepancy,
    /// `D_KL(f ‖ q_N)` in nats at `--N`; null when infinite.
    Kl,
    /// Shannon entropy in base `--B`.
    Entropy,
    /// Expected bits per symbol for words of length `--m` from state `--n`.
    ExpectedBits,
    /// Relative excess at `--p`, as an exact fraction string.
    RelativeExcess,
    /// Expected digits per symbol of the streamed codec.
    Ewl,
    /// Expected word length minus Shannon entropy.
    EntropyLoss,
    /// `log₁₀(1/|λ₂|)` of the stream chain; null when infinite.
    EigenGap,
    /// Whether the table satisfies the scheduling criteria.
    Criteria,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::Discrepancy => "discrepancy",
            Metric::Kl => "kl",
            Metric::Entropy => "entropy",
            Metric::ExpectedBits => "expected-bits",
            Metric::RelativeExcess => "relative-excess",
            Metric::Ewl => "ewl",
            Metric::EntropyLoss => "entropy-loss",
            Metric::EigenGap => "eigen-gap",
            Metric::Criteria => "criteria",
        }
    }

    fn is_stream(self) -> bool {
        matches!(self, Metric::Ewl | Metric::EntropyLoss | Metric::EigenGap)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricOptions {
    pub prefix: Option<u64>,
    pub m: u32,
    pub n: u64,
    pub p: Option<Ratio<u64>>,
    pub base: u64,
    pub mults: Vec<u64>,
}

impl Default for MetricOptions {
    fn default() -> Self {
        MetricOptions {
            prefix: None,
            m: 4,
            n: 1000,
            p: None,
            base: 2,
            mults: vec![1],
        }
    }
}

#[derive(Debug, Clone)]
pub struct Input {
    pub sample: String,
    pub algorithm: Option<String>,
    pub alloc: Allocation,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub sample: String,
    pub algorithm: Option<String>,
    #[serde(rename = "B")]
    pub base: Option<u64>,
    #[serde(rename = "M")]
    pub start: Option<u64>,
    pub metric: &'static str,
    pub value: Value,
}

fn number(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number)
}

fn single(metric: Metric, input: &Input, opts: &MetricOptions) -> anstab::Result<Value> {
    let a = &input.alloc;
    let q = a.period();
    Ok(match metric {
        Metric::Discrepancy => {
            let d = max_discrepancy(a, opts.prefix.unwrap_or(q).max(1));
            number(*d.numer() as f64 / *d.denom() as f64)
        }
        Metric::Kl => number(kl_divergence(a, opts.prefix.unwrap_or(q).max(1))),
        Metric::Entropy => number(shannon_entropy(a.freq(), opts.base as f64)),
        Metric::ExpectedBits => number(expected_bits(a, opts.m.max(1), &CodecState::from(opts.n))?),
        Metric::RelativeExcess => {
            let p = opts
                .p
                .ok_or_else(|| Error::Format("relative-excess needs --p".into()))?;
            Value::String(relative_excess(a, p)?.to_string())
        }
        Metric::Criteria => Value::Bool(verify_theorem_criteria(a)),
        Metric::Ewl | Metric::EntropyLoss | Metric::EigenGap => unreachable!("stream metric"),
    })
}

fn stream(metric: Metric, input: &Input, base: u64, start: u64) -> anstab::Result<Value> {
    let cfg = StreamConfig::new(&input.alloc, base, start)?;
    let model = transition_matrix(&cfg);
    Ok(match metric {
        Metric::EigenGap => number(eigen_gap(&model)?),
        Metric::Ewl => number(expected_word_length(&cfg, &invariant_measure(&model)?)),
        _ => number(entropy_loss(&cfg, &invariant_measure(&model)?)),
    })
}

/// One record per input, or per input and `K` for the stream metrics, in
/// input order.
pub fn run_metric(metric: Metric, inputs: &[Input], opts: &MetricOptions) -> anstab::Result<Vec<Record>> {
    let jobs: Vec<(&Input, Option<u64>)> = inputs
        .iter()
        .flat_map(|i| {
            let ks: Vec<Option<u64>> = if metric.is_stream() {
                opts.mults.iter().map(|&k| Some(k)).collect()
            } else {
                vec![None]
            };
            ks.into_iter().map(move |k| (i, k))
        })
        .collect();
    jobs.par_iter()
        .map(|&(input, k)| {
            let (base, start, value) = match k {
                Some(k) => {
                    let start = k
                        .checked_mul(input.alloc.period())
                        .ok_or(Error::Overflow("K·Q"))?;
                    (Some(opts.base), Some(start), stream(metric, input, opts.base, start)?)
                }
                None => (None, None, single(metric, input, opts)?),
            };
            Ok(Record {
                sample: input.sample.clone(),
                algorithm: input.algorithm.clone(),
                base,
                start,
                metric: metric.name(),
                value,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use anstab::{validate_allocation, FrequencyTable};

    fn ab() -> Input {
        let ft = FrequencyTable::new([("a", 1), ("b", 1)]).unwrap();
        Input {
            sample: "ab".into(),
            algorithm: None,
            alloc: validate_allocation(&["a", "b"], &ft).unwrap(),
        }
    }

    #[test]
    fn records() {
        let i = [ab()];
        let o = MetricOptions::default();
        let r = run_metric(Metric::Discrepancy, &i, &o).unwrap();
        assert_eq!(r[0].value, serde_json::json!(0.5));
        assert_eq!(r[0].base, None);
        let r = run_metric(Metric::Kl, &i, &MetricOptions { prefix: Some(1), ..o.clone() }).unwrap();
        assert_eq!(r[0].value, Value::Null);
        let r = run_metric(Metric::EigenGap, &i, &MetricOptions { mults: vec![1, 2], ..o.clone() }).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].value, Value::Null);
        assert_eq!(r[1].start, Some(4));
        let r = run_metric(Metric::Ewl, &i, &o).unwrap();
        assert_eq!(r[0].value, serde_json::json!(1.0));
        let r = run_metric(Metric::RelativeExcess, &i, &MetricOptions { p: Some(Ratio::new(1, 4)), ..o.clone() }).unwrap();
        assert_eq!(r[0].value, Value::String("6/7".into()));
        assert!(run_metric(Metric::RelativeExcess, &i, &o).is_err());
        let r = run_metric(Metric::Criteria, &i, &o).unwrap();
        assert_eq!(r[0].value, Value::Bool(true));
    }
}

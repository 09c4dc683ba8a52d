//! The streamed codec with its digit stream dropped is a Markov chain on
//! `I`: from `x`, symbol `s` (probability `f(s)`) moves to the state the
//! push of `s` lands in.

use nalgebra::DMatrix;

use super::entropy::shannon_entropy;
use crate::error::{Error, Result};
use crate::stream::StreamConfig;

pub const RESIDUAL_TOLERANCE: f64 = 1e-10;
pub const MAX_POWER_ITERATIONS: usize = 1_000_000;

/// Row-stochastic transition matrix over `I`, stored sparsely. State `x`
/// has row index `x − M`.
#[derive(Debug, Clone, PartialEq)]
pub struct MarkovModel {
    pub start: u64,
    pub base: u32,
    rows: Vec<Vec<(usize, f64)>>,
}

impl MarkovModel {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Non-zero entries `(column, probability)` of a row, columns ascending.
    pub fn row(&self, i: usize) -> &[(usize, f64)] {
        &self.rows[i]
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let n = self.dim();
        let mut m = DMatrix::zeros(n, n);
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, w) in row {
                m[(i, j)] += w;
            }
        }
        m
    }

    /// `p·P`.
    pub fn apply(&self, p: &[f64], out: &mut [f64]) {
        out.iter_mut().for_each(|v| *v = 0.0);
        for (row, &mass) in self.rows.iter().zip(p) {
            if mass == 0.0 {
                continue;
            }
            for &(j, w) in row {
                out[j] += mass * w;
            }
        }
    }
}

pub fn transition_matrix(cfg: &StreamConfig) -> MarkovModel {
    let ft = cfg.alloc().freq();
    let (low, high) = cfg.interval();
    let rows = (low..=high)
        .map(|x| {
            let mut row: Vec<(usize, f64)> = (0..ft.len())
                .map(|s| ((cfg.next_state(s, x) - low) as usize, ft.probability(s)))
                .collect();
            row.sort_by_key(|&(j, _)| j);
            row.dedup_by(|b, a| {
                if a.0 == b.0 {
                    a.1 += b.1;
                    true
                } else {
                    false
                }
            });
            row
        })
        .collect();
    MarkovModel {
        start: cfg.start(),
        base: cfg.base(),
        rows,
    }
}

/// `‖pP − p‖∞`.
pub fn residual(model: &MarkovModel, p: &[f64]) -> f64 {
    let mut next = vec![0.0; p.len()];
    model.apply(p, &mut next);
    next.iter()
        .zip(p)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

/// Invariant probability vector by undamped power iteration from the
/// uniform distribution.
///
/// For reducible chains this selects the limit reached from the uniform
/// start; periodic chains never settle and report
/// [`Error::NumericalInstability`].
pub fn invariant_measure(model: &MarkovModel) -> Result<Vec<f64>> {
    let n = model.dim();
    let mut p = vec![1.0 / n as f64; n];
    let mut next = vec![0.0; n];
    for _ in 0..MAX_POWER_ITERATIONS {
        model.apply(&p, &mut next);
        let diff = next
            .iter()
            .zip(&p)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        if diff <= RESIDUAL_TOLERANCE {
            return Ok(p);
        }
        let total: f64 = next.iter().sum();
        for (dst, src) in p.iter_mut().zip(&next) {
            *dst = src / total;
        }
    }
    Err(Error::NumericalInstability(format!(
        "power iteration on {n} states did not reach residual {RESIDUAL_TOLERANCE:e}"
    )))
}

/// Expected number of base-`B` digits written per pushed symbol under the
/// state distribution `p`.
///
/// A push of `s` writes `λ_s − 1` digits from states below
/// `M·f(s)·B^{λ_s}` and `λ_s` digits from the rest.
pub fn expected_word_length(cfg: &StreamConfig, p: &[f64]) -> f64 {
    let ft = cfg.alloc().freq();
    let (low, _) = cfg.interval();
    let q = ft.period() as u128;
    let mut prefix = Vec::with_capacity(p.len() + 1);
    prefix.push(0.0);
    for &v in p {
        prefix.push(prefix.last().unwrap() + v);
    }
    let total = *prefix.last().unwrap();
    (0..ft.len())
        .map(|s| {
            let lambda = cfg.digits_per_symbol(s);
            let split = low as u128 * ft.count(s) as u128 * (cfg.base() as u128).pow(lambda) / q;
            let below = prefix[(split - low as u128) as usize];
            let short = if lambda == 0 { 0.0 } else { (lambda - 1) as f64 * below };
            ft.probability(s) * (short + lambda as f64 * (total - below))
        })
        .sum()
}

/// `EWL − H_B`.
pub fn entropy_loss(cfg: &StreamConfig, p: &[f64]) -> f64 {
    expected_word_length(cfg, p) - shannon_entropy(cfg.alloc().freq(), cfg.base() as f64)
}

/// `log₁₀(1/|λ₂|)` where `λ₂` is the largest-modulus eigenvalue left after
/// removing the eigenvalue 1; `+∞` when `|λ₂| ≤ 1e−14`.
pub fn eigen_gap(model: &MarkovModel) -> Result<f64> {
    let dense = model.to_dense();
    let schur = dense
        .try_schur(1e-15, 100_000)
        .ok_or_else(|| Error::NumericalInstability("Schur decomposition did not converge".into()))?;
    let eig = schur.complex_eigenvalues();
    let (lead, dist) = eig
        .iter()
        .enumerate()
        .map(|(i, z)| (i, (z - nalgebra::Complex::new(1.0, 0.0)).norm()))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .ok_or_else(|| Error::NumericalInstability("empty chain".into()))?;
    if dist > 1e-9 {
        return Err(Error::NumericalInstability(format!(
            "no eigenvalue within 1e-9 of one (closest at distance {dist:e})"
        )));
    }
    let second = eig
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != lead)
        .map(|(_, z)| z.norm())
        .fold(0.0, f64::max);
    Ok(if second <= 1e-14 {
        f64::INFINITY
    } else {
        -second.log10()
    })
}

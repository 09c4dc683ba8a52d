//! Symbol frequencies as exact integer counts.
//!
//! A table with counts `c_s` and length `Q = Σ c_s` stands for the
//! probabilities `f(s) = c_s / Q`. All arithmetic on `f` used by the table
//! generators goes through these integers; nothing here touches floats
//! except the reporting helper [`FrequencyTable::probability`].

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Symbols with positive integer counts.
///
/// The construction order of the symbols is the canonical tie-break order
/// used by every generator in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyTable {
    symbols: Vec<String>,
    counts: Vec<u64>,
    period: u64,
    index: HashMap<String, usize>,
}

impl FrequencyTable {
    pub fn new<I, S>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, u64)>,
        S: Into<String>,
    {
        let mut symbols = Vec::new();
        let mut counts = Vec::new();
        let mut index = HashMap::new();
        let mut period: u64 = 0;
        for (sym, count) in entries {
            let sym = sym.into();
            if count == 0 {
                return Err(Error::NonPositiveCount(sym));
            }
            if index.contains_key(&sym) {
                return Err(Error::DuplicateSymbol(sym));
            }
            period = period
                .checked_add(count)
                .ok_or(Error::Overflow("table length"))?;
            index.insert(sym.clone(), symbols.len());
            symbols.push(sym);
            counts.push(count);
        }
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        Ok(FrequencyTable {
            symbols,
            counts,
            period,
            index,
        })
    }

    /// Builds a table from parallel symbol and count lists.
    pub fn from_parts(symbols: &[String], counts: &[u64]) -> Result<Self> {
        if symbols.len() != counts.len() {
            return Err(Error::Format(format!(
                "{} symbols but {} counts",
                symbols.len(),
                counts.len()
            )));
        }
        Self::new(symbols.iter().cloned().zip(counts.iter().copied()))
    }

    /// Counts with symbols named `s0`, `s1`, ...
    pub fn from_counts(counts: &[u64]) -> Result<Self> {
        Self::new(
            counts
                .iter()
                .enumerate()
                .map(|(i, &c)| (format!("s{i}"), c)),
        )
    }

    /// Table length `Q`.
    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn symbol(&self, idx: usize) -> &str {
        &self.symbols[idx]
    }

    pub fn count(&self, idx: usize) -> u64 {
        self.counts[idx]
    }

    pub fn index_of(&self, sym: &str) -> Result<usize> {
        self.index
            .get(sym)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol(sym.to_string()))
    }

    /// `f(s)` as a float, for reporting only.
    pub fn probability(&self, idx: usize) -> f64 {
        self.counts[idx] as f64 / self.period as f64
    }

    pub fn min_count(&self) -> u64 {
        *self.counts.iter().min().expect("non-empty alphabet")
    }

    /// `⌊f(s)·m⌋` computed exactly.
    pub fn scaled_floor(&self, sym: &str, m: u64) -> Result<u64> {
        Ok(self.floor_at(self.index_of(sym)?, m))
    }

    /// `⌊f(s)·m⌋` for a symbol index.
    pub fn floor_at(&self, idx: usize, m: u64) -> u64 {
        floor_ratio(self.counts[idx], m, self.period)
    }

    /// Smallest `m` with `⌊f(s)·m⌋ ≥ k`, i.e. `⌈k·Q / c_s⌉`.
    pub fn hard_deadline(&self, idx: usize, k: u64) -> u64 {
        ceil_div(k as u128 * self.period as u128, self.counts[idx] as u128) as u64
    }

    /// Smallest `m` with `⌊f(s)·m + 1/2⌋ ≥ k` for `k ≥ 1`, i.e.
    /// `⌈(2k − 1)·Q / (2·c_s)⌉`.
    pub fn soft_deadline(&self, idx: usize, k: u64) -> u64 {
        debug_assert!(k >= 1);
        ceil_div(
            (2 * k as u128 - 1) * self.period as u128,
            2 * self.counts[idx] as u128,
        ) as u64
    }
}

pub(crate) fn floor_ratio(count: u64, m: u64, period: u64) -> u64 {
    (count as u128 * m as u128 / period as u128) as u64
}

pub(crate) fn ceil_div(a: u128, b: u128) -> u128 {
    a.div_ceil(b)
}

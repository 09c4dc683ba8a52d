//! One period of an allocation and rank/select over its periodic extension.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freq::FrequencyTable;

/// A length-`Q` symbol table, read as the periodic allocation
/// `A[n] = table[n mod Q]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Allocation {
    freq: FrequencyTable,
    table: Vec<usize>,
    occ: Vec<Vec<u64>>,
}

impl Allocation {
    /// Wraps a table given as symbol indices into `freq`.
    pub fn from_indices(freq: FrequencyTable, table: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = table.iter().find(|&&i| i >= freq.len()) {
            return Err(Error::UnknownSymbol(format!("#{bad}")));
        }
        if table.len() as u64 != freq.period() {
            return Err(Error::LengthMismatch {
                expected: freq.period(),
                actual: table.len() as u64,
            });
        }
        let mut occ = vec![Vec::new(); freq.len()];
        for (pos, &s) in table.iter().enumerate() {
            occ[s].push(pos as u64);
        }
        for (s, list) in occ.iter().enumerate() {
            if list.len() as u64 != freq.count(s) {
                return Err(Error::CountMismatch {
                    symbol: freq.symbol(s).to_string(),
                    expected: freq.count(s),
                    actual: list.len() as u64,
                });
            }
        }
        Ok(Allocation { freq, table, occ })
    }

    pub fn freq(&self) -> &FrequencyTable {
        &self.freq
    }

    pub fn period(&self) -> u64 {
        self.freq.period()
    }

    /// The period as symbol indices.
    pub fn indices(&self) -> &[usize] {
        &self.table
    }

    /// The period as symbol names.
    pub fn symbols(&self) -> Vec<&str> {
        self.table.iter().map(|&s| self.freq.symbol(s)).collect()
    }

    /// Positions of `idx` within one period, ascending.
    pub fn occurrences(&self, idx: usize) -> &[u64] {
        &self.occ[idx]
    }

    /// Symbol index at position `n` of the periodic extension.
    pub fn symbol_at(&self, n: u64) -> usize {
        self.table[(n % self.period()) as usize]
    }

    /// Number of occurrences of `s` at positions `m ≤ n`.
    pub fn rank(&self, sym: &str, n: u64) -> Result<u64> {
        Ok(self.rank_idx(self.freq.index_of(sym)?, n))
    }

    pub fn rank_idx(&self, idx: usize, n: u64) -> u64 {
        self.count_before(idx, n + 1)
    }

    /// Number of occurrences of `idx` at positions `m < n`, written
    /// `n(s, N)` in the discrepancy literature.
    pub fn count_before(&self, idx: usize, n: u64) -> u64 {
        let q = self.period();
        let full = n / q;
        let rem = n % q;
        let partial = self.occ[idx].partition_point(|&p| p < rem) as u64;
        full * self.freq.count(idx) + partial
    }

    /// Position of the `n`-th occurrence (1-based) of `s`.
    pub fn select(&self, sym: &str, n: u64) -> Result<u64> {
        let idx = self.freq.index_of(sym)?;
        if n == 0 {
            return Err(Error::NonPositiveOrdinal);
        }
        Ok(self.select_idx(idx, n))
    }

    /// `select` for a symbol index; `n` must be at least 1.
    pub fn select_idx(&self, idx: usize, n: u64) -> u64 {
        debug_assert!(n >= 1);
        let c = self.freq.count(idx);
        let k = n - 1;
        (k / c) * self.period() + self.occ[idx][(k % c) as usize]
    }
}

/// Checks that `table` holds each symbol exactly `c_s` times.
pub fn validate_allocation<S: AsRef<str>>(table: &[S], ft: &FrequencyTable) -> Result<Allocation> {
    let indices = table
        .iter()
        .map(|s| ft.index_of(s.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    Allocation::from_indices(ft.clone(), indices)
}

/// On-disk table interchange format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub symbols: Vec<String>,
    pub counts: Vec<u64>,
    pub allocation: Vec<String>,
    /// Generator name, informational only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algorithm: Option<String>,
}

impl TableFile {
    pub fn from_allocation(alloc: &Allocation, algorithm: Option<&str>) -> Self {
        TableFile {
            symbols: alloc.freq().symbols().to_vec(),
            counts: alloc.freq().counts().to_vec(),
            allocation: alloc.symbols().into_iter().map(String::from).collect(),
            algorithm: algorithm.map(String::from),
        }
    }

    pub fn to_allocation(&self) -> Result<Allocation> {
        let ft = FrequencyTable::from_parts(&self.symbols, &self.counts)?;
        validate_allocation(&self.allocation, &ft)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }
}

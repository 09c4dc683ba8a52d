use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::into_allocation;
use crate::alloc::Allocation;
use crate::freq::FrequencyTable;

/// Initial heap value of Duda's allocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DudaVariant {
    /// `1/(2f(s))`, the later refinement.
    Half,
    /// `1/f(s)`, the original.
    One,
}

/// Heap entry `(v, f(s), s)` with `v = num·Q / (den·c_s)`; `den` is 2 for
/// the half variant and 1 otherwise, so values stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Entry {
    num: u64,
    den: u64,
    count: u64,
    symbol: usize,
}

impl Entry {
    fn key_cmp(&self, other: &Self) -> Ordering {
        // num·Q/(den·c) vs num'·Q/(den'·c'); Q cancels.
        let lhs = self.num as u128 * other.den as u128 * other.count as u128;
        let rhs = other.num as u128 * self.den as u128 * self.count as u128;
        lhs.cmp(&rhs)
            .then(self.count.cmp(&other.count))
            .then(self.symbol.cmp(&other.symbol))
    }
}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        // BinaryHeap is a max-heap; invert for extract-min.
        other.key_cmp(self)
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Places symbols in the order in which the points `(k + offset)/f(s)`
/// appear on the number line, using a priority queue keyed on
/// `(value, f(s), construction index)`.
pub fn duda(ft: &FrequencyTable, variant: DudaVariant) -> Allocation {
    let (start, step, den) = match variant {
        DudaVariant::Half => (1, 2, 2),
        DudaVariant::One => (1, 1, 1),
    };
    let mut heap: BinaryHeap<Entry> = (0..ft.len())
        .map(|s| Entry {
            num: start,
            den,
            count: ft.count(s),
            symbol: s,
        })
        .collect();
    let mut table = Vec::with_capacity(ft.period() as usize);
    for _ in 0..ft.period() {
        let mut e = heap.pop().expect("heap never empties");
        table.push(e.symbol);
        e.num += step;
        heap.push(e);
    }
    into_allocation(ft, table)
}

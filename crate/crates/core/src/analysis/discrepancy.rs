use num_rational::Ratio;

use crate::alloc::Allocation;

/// `max |c_s·N − Q·n(s,N)|` over `1 ≤ N ≤ n_max` and all symbols.
pub fn max_deviation(alloc: &Allocation, n_max: u64) -> u64 {
    let ft = alloc.freq();
    let q = ft.period() as i128;
    let mut seen = vec![0i128; ft.len()];
    let mut worst = 0u64;
    for n in 1..=n_max {
        seen[alloc.symbol_at(n - 1)] += 1;
        for (s, &c) in ft.counts().iter().enumerate() {
            let d = (c as i128 * n as i128 - q * seen[s]).unsigned_abs() as u64;
            worst = worst.max(d);
        }
    }
    worst
}

/// `max |N·f(s) − rank(s, N−1)|` over `1 ≤ N ≤ n_max`, exactly.
///
/// `n_max = Q` already attains the supremum over the periodic extension.
pub fn max_discrepancy(alloc: &Allocation, n_max: u64) -> Ratio<u64> {
    Ratio::new(max_deviation(alloc, n_max), alloc.period())
}

/// Checks `|N_s − n/f(s)| ≤ bound` for the `n`-th occurrence at index
/// `N_s − 1`, `n ≤ periods·c_s`, where `bound_twice(c)` returns `2·bound`
/// scaled by `c·c_min / Q`.
fn occurrences_within(alloc: &Allocation, periods: u64, bound_twice: impl Fn(u64, u64) -> u128) -> bool {
    let ft = alloc.freq();
    let q = ft.period() as i128;
    let c_min = ft.min_count();
    (0..ft.len()).all(|s| {
        let c = ft.count(s);
        (1..=periods * c).all(|n| {
            let pos = alloc.select_idx(s, n) as i128 + 1;
            // 2·c_min·|c·N_s − n·Q| compared against the scaled bound.
            let lhs = 2 * c_min as u128 * (c as i128 * pos - n as i128 * q).unsigned_abs();
            lhs <= bound_twice(c, c_min)
        })
    })
}

/// `|N_s − n/f(s)| ≤ ½(1/f(s) + 1/min_t f(t))`.
pub fn duda_bound_holds(alloc: &Allocation, periods: u64) -> bool {
    let q = alloc.period() as u128;
    occurrences_within(alloc, periods, |c, c_min| q * c_min as u128 + q * c as u128)
}

/// `|N_s − n/f(s)| ≤ 1/f(s)`.
pub fn nth_occurrence_bound_holds(alloc: &Allocation, periods: u64) -> bool {
    let q = alloc.period() as u128;
    occurrences_within(alloc, periods, |_, c_min| 2 * q * c_min as u128)
}

use super::into_allocation;
use crate::alloc::Allocation;
use crate::freq::FrequencyTable;

/// Earliest-deadline-first allocation over one period.
pub fn edf(ft: &FrequencyTable) -> Allocation {
    into_allocation(ft, edf_sequence(ft, ft.period()))
}

/// The first `len` symbols produced by the earliest-deadline-first rule.
///
/// At each index `N` only symbols with `numAlloc[s] = ⌊f(s)N⌋` are
/// candidates. Among them the one whose next hard deadline
/// `min{M : ⌊f(s)M⌋ ≥ numAlloc[s] + 1}` is earliest wins; equal deadlines
/// go to the smaller `numAlloc[s] − f(s)(N+1)`, then to the later-examined
/// symbol of equal or smaller probability.
pub fn edf_sequence(ft: &FrequencyTable, len: u64) -> Vec<usize> {
    let q = ft.period() as i128;
    let mut num_alloc = vec![0u64; ft.len()];
    let mut out = Vec::with_capacity(len as usize);
    for n in 0..len {
        // U = None stands for +∞.
        let mut best: Option<(usize, u64, i128)> = None;
        for s in 0..ft.len() {
            if num_alloc[s] != ft.floor_at(s, n) {
                continue;
            }
            let next = num_alloc[s] + 1;
            if let Some((_, u, _)) = best {
                if ft.floor_at(s, u) < next {
                    continue;
                }
            }
            let u_new = ft.hard_deadline(s, next);
            // Q·(numAlloc[s] − f(s)(N+1))
            let v_new = num_alloc[s] as i128 * q - ft.count(s) as i128 * (n as i128 + 1);
            let take = match best {
                None => true,
                Some((cur, u, v)) => {
                    u_new < u || v_new < v || (v_new == v && ft.count(cur) >= ft.count(s))
                }
            };
            if take {
                best = Some((s, u_new, v_new));
            }
        }
        let (s, _, _) = best.expect("some symbol is always at its floor");
        num_alloc[s] += 1;
        out.push(s);
    }
    out
}

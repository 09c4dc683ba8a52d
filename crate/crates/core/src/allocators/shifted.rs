use std::collections::VecDeque;

use super::deadlines::{spawn_schedule, Deadlines};
use super::into_allocation;
use crate::alloc::Allocation;
use crate::freq::FrequencyTable;

/// Shifted-priorities allocation over one period.
pub fn shifted_priorities(ft: &FrequencyTable) -> Allocation {
    into_allocation(ft, shifted_priorities_sequence(ft, ft.period()))
}

/// The first `len` symbols (a multiple of `Q`) of the shifted-priorities
/// rule.
///
/// Each spawned job carries a soft deadline
/// `min{M : ⌊f(s)M + 1/2⌋ ≥ k}` for the `k`-th occurrence, pulling symbols
/// towards the points `(k − 1/2)/f(s)`. The first occurrence of `s` in each
/// period uses its hard deadline instead. The soft pick is overridden when
/// the look-ahead shows that a hard deadline before the picked symbol's own
/// would otherwise be missed.
pub fn shifted_priorities_sequence(ft: &FrequencyTable, len: u64) -> Vec<usize> {
    assert!(len % ft.period() == 0, "length must be a whole number of periods");
    let mut deadlines = Deadlines::new(ft, len);
    let spawns = spawn_schedule(ft, len);
    let mut queue: Vec<VecDeque<u64>> = vec![VecDeque::new(); ft.len()];
    let mut out = Vec::with_capacity(len as usize);

    for n in 0..len {
        for &(s, k) in &spawns[n as usize] {
            let key = if (k - 1) % ft.count(s) == 0 {
                ft.hard_deadline(s, k)
            } else {
                ft.soft_deadline(s, k)
            };
            queue[s].push_back(key);
        }

        let pick = |eligible: &dyn Fn(usize) -> bool| {
            (0..ft.len())
                .filter(|&s| eligible(s))
                .filter_map(|s| queue[s].front().map(|&key| (key, ft.count(s), s)))
                .min()
                .map(|(_, _, s)| s)
        };

        let mut t = pick(&|_| true).expect("a job is always pending");
        let hard = deadlines.earliest(t).expect("pending job has a deadline");
        let l = deadlines.lookahead(n, hard);
        if l < hard {
            t = pick(&|s| deadlines.earliest(s).is_some_and(|d| d <= l))
                .expect("an urgent job is pending");
        }

        out.push(t);
        deadlines.remove_smallest(t);
        queue[t].pop_front();
    }
    out
}

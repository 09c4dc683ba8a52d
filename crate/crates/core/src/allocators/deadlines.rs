use std::collections::VecDeque;

use crate::freq::FrequencyTable;

/// Outstanding hard deadlines `⌈k·Q/c_s⌉` for `k = 1..=c_s·len/Q`, with a
/// Fenwick tree counting deadlines at or below a threshold.
pub(super) struct Deadlines {
    per_symbol: Vec<VecDeque<u64>>,
    tree: Vec<u64>,
}

impl Deadlines {
    pub fn new(ft: &FrequencyTable, len: u64) -> Self {
        debug_assert_eq!(len % ft.period(), 0);
        let periods = len / ft.period();
        let mut d = Deadlines {
            per_symbol: Vec::with_capacity(ft.len()),
            tree: vec![0; len as usize + 2],
        };
        for s in 0..ft.len() {
            let list: VecDeque<u64> = (1..=ft.count(s) * periods)
                .map(|k| ft.hard_deadline(s, k))
                .collect();
            for &k in &list {
                d.add(k, 1);
            }
            d.per_symbol.push(list);
        }
        d
    }

    fn add(&mut self, key: u64, delta: i64) {
        let mut i = key as usize + 1;
        while i < self.tree.len() {
            self.tree[i] = (self.tree[i] as i64 + delta) as u64;
            i += i & i.wrapping_neg();
        }
    }

    /// Number of outstanding deadlines `≤ l`.
    pub fn count_at_most(&self, l: u64) -> u64 {
        let mut i = (l as usize + 1).min(self.tree.len() - 1);
        let mut total = 0;
        while i > 0 {
            total += self.tree[i];
            i -= i & i.wrapping_neg();
        }
        total
    }

    pub fn earliest(&self, s: usize) -> Option<u64> {
        self.per_symbol[s].front().copied()
    }

    pub fn remove_smallest(&mut self, s: usize) {
        let k = self.per_symbol[s]
            .pop_front()
            .expect("allocated symbol has an outstanding deadline");
        self.add(k, -1);
    }

    /// Extends `L` from `N + 1` while fewer than `L − N` deadlines fall at
    /// or before `L`, stopping at `cap`.
    pub fn lookahead(&self, n: u64, cap: u64) -> u64 {
        let mut l = n + 1;
        while l < cap && self.count_at_most(l) < l - n {
            l += 1;
        }
        l
    }
}

/// Allocation indices at which each symbol's next job is spawned: the
/// `(k+1)`-th occurrence of `s` becomes allocatable at `⌈k·Q/c_s⌉`.
///
/// Returns, per index `N < len`, the symbols spawned there together with the
/// ordinal `k + 1` of the occurrence they make available.
pub(super) fn spawn_schedule(ft: &FrequencyTable, len: u64) -> Vec<Vec<(usize, u64)>> {
    let periods = len / ft.period();
    let mut at = vec![Vec::new(); len as usize];
    for s in 0..ft.len() {
        for k in 0..ft.count(s) * periods {
            let r = ft.hard_deadline(s, k);
            at[r as usize].push((s, k + 1));
        }
    }
    at
}

use super::deadlines::{spawn_schedule, Deadlines};
use super::into_allocation;
use crate::alloc::Allocation;
use crate::freq::FrequencyTable;

/// Greedy discrepancy minimisation over one period.
pub fn greedy_discrepancy(ft: &FrequencyTable) -> Allocation {
    into_allocation(ft, greedy_discrepancy_sequence(ft, ft.period()))
}

/// The first `len` symbols (a multiple of `Q`) of the greedy rule.
///
/// Among spawned symbols whose earliest hard deadline lies within the
/// look-ahead bound, pick the one maximising `f(s)(N+1) − numAlloc[s]`;
/// ties go to the smaller probability, then construction order.
pub fn greedy_discrepancy_sequence(ft: &FrequencyTable, len: u64) -> Vec<usize> {
    assert!(len % ft.period() == 0, "length must be a whole number of periods");
    let q = ft.period() as i128;
    let mut deadlines = Deadlines::new(ft, len);
    let spawns = spawn_schedule(ft, len);
    let mut pending = vec![0u64; ft.len()];
    let mut num_alloc = vec![0u64; ft.len()];
    let mut out = Vec::with_capacity(len as usize);

    for n in 0..len {
        for &(s, _) in &spawns[n as usize] {
            pending[s] += 1;
        }
        let l = deadlines.lookahead(n, len);
        // Q·(f(s)(N+1) − numAlloc[s])
        let mut best: Option<(usize, i128)> = None;
        for s in 0..ft.len() {
            if pending[s] == 0 || !deadlines.earliest(s).is_some_and(|d| d <= l) {
                continue;
            }
            let u = ft.count(s) as i128 * (n as i128 + 1) - num_alloc[s] as i128 * q;
            let take = match best {
                None => true,
                Some((cur, bu)) => u > bu || (u == bu && ft.count(s) < ft.count(cur)),
            };
            if take {
                best = Some((s, u));
            }
        }
        let (t, _) = best.expect("an urgent job is pending");
        out.push(t);
        deadlines.remove_smallest(t);
        pending[t] -= 1;
        num_alloc[t] += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::allocators::testutil::{ft, max_int_discrepancy, fixed_samples};

    #[test]
    fn hand_simulated() {
        assert_eq!(greedy_discrepancy(&ft(&[("a", 1), ("b", 1)])).symbols(), ["a", "b"]);
        assert_eq!(
            greedy_discrepancy(&ft(&[("a", 2), ("b", 2)])).symbols(),
            ["a", "b", "a", "b"]
        );
    }

    #[test]
    fn zipf_sample() {
        let t = &fixed_samples()[3];
        let a = greedy_discrepancy(t);
        assert_eq!(a.period(), 30);
        assert!(max_int_discrepancy(t, a.indices(), 300) <= 30);
    }

    #[test]
    fn binary_alphabet_rounds_half_up() {
        // With two symbols, a is placed iff f(a)(N+1) − numAlloc[a] ≥ 1/2.
        let f = ft(&[("a", 3), ("b", 5)]);
        let a = greedy_discrepancy(&f);
        let mut na = 0u64;
        for (n, &s) in a.indices().iter().enumerate() {
            let take_a = 2 * (3 * (n as u64 + 1)) >= 2 * 8 * na + 8;
            assert_eq!(s == 0, take_a, "index {n}");
            if s == 0 {
                na += 1;
            }
        }
    }

    #[test]
    fn first_period_is_the_table() {
        for t in fixed_samples() {
            let q = t.period();
            let long = greedy_discrepancy_sequence(&t, 3 * q);
            assert_eq!(&long[..q as usize], greedy_discrepancy(&t).indices());
        }
    }
}

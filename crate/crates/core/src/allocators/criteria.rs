use crate::alloc::Allocation;

/// Checks the two scheduling conditions at every index `N` of one period.
///
/// (i) `A[N]` is at its floor, `rank(A[N], N−1) = ⌊f(A[N])N⌋`, or its floor
/// steps up at `N+1`.
/// (ii) for every `M` with `N+1 ≤ M < min{L : ⌊f(A[N])L⌋ ≥ rank(A[N], N)}`
/// the outstanding demand `Σ_s max{0, ⌊f(s)M⌋ − rank(s, N−1)}` stays
/// strictly below `M − N`.
///
/// Both conditions are invariant under shifting `N` by a period, so one
/// period decides the whole extension.
pub fn verify_theorem_criteria(alloc: &Allocation) -> bool {
    let ft = alloc.freq();
    let mut before = vec![0u64; ft.len()];
    for (n, &t) in alloc.indices().iter().enumerate() {
        let n = n as u64;
        let at_floor = before[t] == ft.floor_at(t, n);
        let steps_up = ft.floor_at(t, n + 1) == ft.floor_at(t, n) + 1;
        if !(at_floor || steps_up) {
            return false;
        }
        let horizon = ft.hard_deadline(t, before[t] + 1);
        for m in n + 1..horizon {
            let demand: u64 = (0..ft.len())
                .map(|s| ft.floor_at(s, m).saturating_sub(before[s]))
                .sum();
            if demand >= m - n {
                return false;
            }
        }
        before[t] += 1;
    }
    true
}

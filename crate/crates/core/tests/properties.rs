use anstab::allocators::{
    duda, edf_sequence, greedy_discrepancy_sequence, ranged, shifted_priorities_sequence,
    verify_theorem_criteria, DudaVariant,
};
use anstab::analysis::{
    duda_bound_holds, expected_word_length, invariant_measure, kl_discrepancy_bound,
    kl_divergence, max_deviation, max_discrepancy, shannon_entropy, transition_matrix,
};
use anstab::tans::{self, CodecState};
use anstab::{generate, Algorithm, Allocation, FrequencyTable, StreamConfig, StreamParams, StreamState};
use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn counts(max_symbols: usize, max_count: u64) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1..=max_count, 1..=max_symbols)
}

fn table(counts: &[u64]) -> FrequencyTable {
    FrequencyTable::from_counts(counts).unwrap()
}

fn bounded(ft: &FrequencyTable) -> Vec<Allocation> {
    Algorithm::BOUNDED
        .iter()
        .map(|&a| generate(a, ft, StreamParams::default()).unwrap())
        .collect()
}

fn alloc_with_word() -> impl Strategy<Value = (Allocation, Vec<usize>)> {
    (counts(5, 12), 0usize..6).prop_flat_map(|(c, which)| {
        let ft = table(&c);
        let alg = Algorithm::ALL[which];
        let alloc = generate(alg, &ft, StreamParams::default()).unwrap();
        let k = ft.len();
        (Just(alloc), prop::collection::vec(0..k, 0..=32))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_select_agree_with_a_scan(c in counts(5, 10)) {
        let ft = table(&c);
        let a = ranged(&ft);
        let q = a.period();
        let mut seen = vec![0u64; ft.len()];
        for n in 0..10 * q {
            let s = a.symbol_at(n);
            seen[s] += 1;
            prop_assert_eq!(a.select_idx(s, seen[s]), n);
            for t in 0..ft.len() {
                prop_assert_eq!(a.rank_idx(t, n), seen[t]);
                let r = a.rank_idx(t, n);
                if r >= 1 {
                    prop_assert!(a.select_idx(t, r) <= n);
                    prop_assert_eq!(a.rank_idx(t, a.select_idx(t, r)), r);
                }
            }
            prop_assert_eq!(seen.iter().sum::<u64>(), n + 1);
        }
    }

    #[test]
    fn scaled_floor_steps_by_at_most_one(c in counts(5, 20), m in 0u64..500) {
        let ft = table(&c);
        for s in 0..ft.len() {
            let d = ft.floor_at(s, m + 1) - ft.floor_at(s, m);
            prop_assert!(d <= 1);
        }
    }

    #[test]
    fn bounded_generators_keep_discrepancy_at_most_one(c in counts(8, 20)) {
        let ft = table(&c);
        for a in bounded(&ft) {
            prop_assert_eq!(a.freq().counts(), ft.counts());
            prop_assert!(max_deviation(&a, 10 * a.period()) <= a.period());
            prop_assert!(verify_theorem_criteria(&a));
        }
    }

    #[test]
    fn baselines_stay_within_their_bounds(c in counts(8, 20)) {
        let ft = table(&c);
        let q = ft.period();
        let r = ranged(&ft);
        prop_assert!(2 * max_deviation(&r, 10 * q) <= q * q);
        prop_assert!(duda_bound_holds(&duda(&ft, DudaVariant::Half), 10));
        let one = duda(&ft, DudaVariant::One);
        prop_assert_eq!(one.freq().counts(), ft.counts());
    }

    #[test]
    fn criteria_sequences_are_periodic(c in counts(6, 12)) {
        let ft = table(&c);
        let q = ft.period() as usize;
        for seq in [
            edf_sequence(&ft, 3 * q as u64),
            shifted_priorities_sequence(&ft, 3 * q as u64),
            greedy_discrepancy_sequence(&ft, 3 * q as u64),
        ] {
            for n in 0..2 * q {
                prop_assert_eq!(seq[n + q], seq[n]);
            }
        }
    }

    #[test]
    fn generators_are_deterministic(c in counts(6, 12)) {
        let ft = table(&c);
        for alg in Algorithm::ALL.into_iter().filter(|&a| a != Algorithm::DubeYokoo) {
            let p = StreamParams::default();
            prop_assert_eq!(generate(alg, &ft, p).unwrap(), generate(alg, &ft.clone(), p).unwrap());
        }
    }

    #[test]
    fn tabled_roundtrip((a, word) in alloc_with_word(), n in 0u64..=1000) {
        let word: Vec<&str> = word.iter().map(|&s| a.freq().symbol(s)).collect();
        let start = CodecState::from(n);
        let enc = tans::encode_word(&a, &word, &start).unwrap();
        prop_assert_eq!(tans::decode_word(&a, &enc, word.len()), (word, start));
    }

    #[test]
    fn encode_growth_is_within_discrepancy(c in counts(5, 12), n in 0u64..5000) {
        let ft = table(&c);
        for a in bounded(&ft).into_iter().chain([ranged(&ft)]) {
            let d = max_discrepancy(&a, a.period());
            let q = a.period();
            for s in 0..ft.len() {
                let cs = ft.count(s);
                let got = tans::encode_symbol(&a, ft.symbol(s), &CodecState::from(n)).unwrap();
                let got = Ratio::from_integer(got.0.to_u64().unwrap());
                let inv_f = Ratio::new(q, cs);
                let center = Ratio::from_integer(n + 1) * inv_f;
                let slack = d * inv_f;
                prop_assert!(got + Ratio::from_integer(1) <= center + slack);
                prop_assert!(got + Ratio::from_integer(1) >= (center - slack).ceil());
            }
        }
    }

    #[test]
    fn stream_roundtrip_is_lifo(
        (a, word) in alloc_with_word(),
        base in prop::sample::select(vec![2u64, 3, 4]),
        mult in prop::sample::select(vec![1u64, 2, 4, 8]),
    ) {
        let m = mult * a.period();
        let cfg = StreamConfig::new(&a, base, m).unwrap();
        let (lo, hi) = cfg.interval();
        let mut st = StreamState::new(m);
        for &s in &word {
            let before = st.x;
            let written = cfg.push_index(s, &mut st).unwrap() as u32;
            prop_assert!(st.x >= lo && st.x <= hi);
            let lambda = cfg.digits_per_symbol(s);
            let split = m as u128 * a.freq().count(s) as u128 * (base as u128).pow(lambda)
                / a.period() as u128;
            let expect = if (before as u128) >= split { lambda } else { lambda - 1 };
            prop_assert_eq!(written, expect);
        }
        let names: Vec<&str> = word.iter().map(|&s| a.freq().symbol(s)).collect();
        let back = cfg.pop_word(&mut st, word.len()).unwrap();
        prop_assert_eq!(back, names);
        prop_assert_eq!(st, StreamState::new(m));
    }

    #[test]
    fn kl_is_capped_by_discrepancy(c in counts(6, 12)) {
        let ft = table(&c);
        let q = ft.period();
        for a in bounded(&ft) {
            for n in (q / ft.min_count() + 1)..=10 * q {
                let kl = kl_divergence(&a, n);
                prop_assert!(kl <= kl_discrepancy_bound(&ft, n) + 1e-12, "N = {}", n);
            }
            prop_assert_eq!(kl_divergence(&a, q), 0.0);
        }
    }

    #[test]
    fn expected_word_length_exceeds_entropy(c in counts(4, 8), which in 0usize..7) {
        let ft = table(&c);
        let a = generate(Algorithm::ALL[which], &ft, StreamParams::default());
        if let Ok(a) = a {
            let cfg = StreamConfig::new(&a, 2, a.period()).unwrap();
            if let Ok(p) = invariant_measure(&transition_matrix(&cfg)) {
                prop_assert!(expected_word_length(&cfg, &p) >= shannon_entropy(&ft, 2.0) - 1e-9);
            }
        }
    }
}

#[test]
fn shifted_bijection_by_enumeration() {
    for c in [&[1u64, 1][..], &[2, 1, 1], &[1, 2, 3, 4], &[6, 4, 3, 2]] {
        let ft = table(c);
        let a = ranged(&ft);
        let k = ft.len();
        let max_len = 5;
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut frontier = words.clone();
        for _ in 0..max_len {
            frontier = frontier
                .iter()
                .flat_map(|w| (0..k).map(move |s| [w.clone(), vec![s]].concat()))
                .collect();
            words.extend(frontier.iter().cloned());
        }
        let mut images = Vec::with_capacity(words.len());
        for w in &words {
            let names: Vec<&str> = w.iter().map(|&s| ft.symbol(s)).collect();
            let v = tans::shifted_encode(&a, &names).unwrap();
            assert_eq!(tans::shifted_decode(&a, &v), names);
            images.push(v);
        }
        images.sort();
        images.dedup();
        assert_eq!(images.len(), words.len());
        for v in 0..2000u64 {
            let w = tans::shifted_decode(&a, &BigUint::from(v));
            assert_eq!(tans::shifted_encode(&a, &w).unwrap(), BigUint::from(v));
        }
    }
}

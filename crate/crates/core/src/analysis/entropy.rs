use num_bigint::BigUint;

use crate::alloc::Allocation;
use crate::error::{Error, Result};
use crate::freq::FrequencyTable;
use crate::tans::{self, CodecState};

/// Upper bound on the number of words any exhaustive enumeration visits.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

/// `−Σ f(s) log_base f(s)`.
pub fn shannon_entropy(ft: &FrequencyTable, base: f64) -> f64 {
    let h: f64 = (0..ft.len())
        .map(|s| {
            let p = ft.probability(s);
            -p * p.ln()
        })
        .sum();
    h / base.ln()
}

/// `D_KL(f ‖ q_N)` in nats, `q_N(s) = n(s,N)/N`; `+∞` when some symbol
/// has not occurred among the first `N` positions.
pub fn kl_divergence(alloc: &Allocation, n: u64) -> f64 {
    let ft = alloc.freq();
    let q = ft.period() as f64;
    let mut total = 0.0;
    for s in 0..ft.len() {
        let seen = alloc.count_before(s, n);
        if seen == 0 {
            return f64::INFINITY;
        }
        let c = ft.count(s) as f64;
        total += c / q * ((n as f64 * c) / (q * seen as f64)).ln();
    }
    total
}

/// `Σ f(s) ln(N f(s) / (N f(s) − 1))`, the divergence cap implied by
/// discrepancy at most one. Requires `N·min f > 1`.
pub fn kl_discrepancy_bound(ft: &FrequencyTable, n: u64) -> f64 {
    (0..ft.len())
        .map(|s| {
            let nf = n as f64 * ft.probability(s);
            ft.probability(s) * (nf / (nf - 1.0)).ln()
        })
        .sum()
}

/// Expected bit growth per symbol when a word of length `m` drawn from `f`
/// is encoded on top of `n`, by full enumeration of the `|S|^m` words.
pub fn expected_bits(alloc: &Allocation, m: u32, n: &CodecState) -> Result<f64> {
    let ft = alloc.freq();
    let words = (ft.len() as u128).saturating_pow(m);
    if words > ENUMERATION_LIMIT {
        return Err(Error::EnumerationTooLarge(words));
    }
    let probs: Vec<f64> = (0..ft.len()).map(|s| ft.probability(s)).collect();
    let base_bits = tans::bits(n) as f64;

    let total = match n.0.to_u64_digits().as_slice() {
        [] => walk_u128(alloc, &probs, m, 0),
        [v] => walk_u128(alloc, &probs, m, *v as u128),
        _ => None,
    }
    .unwrap_or_else(|| walk_big(alloc, &probs, m, &n.0));
    Ok((total - base_bits) / m as f64)
}

fn bit_len_u128(v: u128) -> f64 {
    (128 - v.leading_zeros()).max(1) as f64
}

/// Σ weight·bits over all words; `None` if a state overflows.
fn walk_u128(alloc: &Allocation, probs: &[f64], depth: u32, state: u128) -> Option<f64> {
    if depth == 0 {
        return Some(bit_len_u128(state));
    }
    let mut acc = 0.0;
    for (s, &p) in probs.iter().enumerate() {
        let next = tans::encode_u128(alloc, s, state)?;
        acc += p * walk_u128(alloc, probs, depth - 1, next)?;
    }
    Some(acc)
}

fn walk_big(alloc: &Allocation, probs: &[f64], depth: u32, state: &BigUint) -> f64 {
    if depth == 0 {
        return state.bits().max(1) as f64;
    }
    probs
        .iter()
        .enumerate()
        .map(|(s, &p)| p * walk_big(alloc, probs, depth - 1, &tans::encode_big(alloc, s, state)))
        .sum()
}

/// `c₁/m + c₂(D+1)/(m n)·min{m, (1 − Σf²)⁻¹}` with `c₁ = c₂ = 8`.
pub fn entropy_envelope(ft: &FrequencyTable, m: u32, n: u64, discrepancy: f64) -> f64 {
    let collision: f64 = (0..ft.len()).map(|s| ft.probability(s).powi(2)).sum();
    let m = m as f64;
    let mixing = if collision >= 1.0 {
        m
    } else {
        m.min(1.0 / (1.0 - collision))
    };
    8.0 / m + 8.0 * (discrepancy + 1.0) / (m * n as f64) * mixing
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alloc::tests::rbgy;
    use crate::alloc::validate_allocation;

    fn ab() -> Allocation {
        let ft = FrequencyTable::new([("a", 1), ("b", 1)]).unwrap();
        validate_allocation(&["a", "b"], &ft).unwrap()
    }

    #[test]
    fn entropy_examples() {
        let u2 = FrequencyTable::from_counts(&[1, 1]).unwrap();
        assert!((shannon_entropy(&u2, 2.0) - 1.0).abs() < 1e-15);
        let u8 = FrequencyTable::from_counts(&[3; 8]).unwrap();
        assert!((shannon_entropy(&u8, 2.0) - 3.0).abs() < 1e-15);
        let one = FrequencyTable::from_counts(&[5]).unwrap();
        assert_eq!(shannon_entropy(&one, 2.0), 0.0);
        let t1 = rbgy();
        assert!((shannon_entropy(t1.freq(), 2.0) - 1.889_246_428_5).abs() < 1e-9);
    }

    #[test]
    fn kl_examples() {
        let t = rbgy();
        assert_eq!(kl_divergence(&t, 15), 0.0);
        assert_eq!(kl_divergence(&ab(), 1), f64::INFINITY);
        // n(·,7) = (3, 2, 1, 1) in the r,b,g,y table's first seven positions.
        let f = [6.0 / 15.0, 4.0 / 15.0, 3.0 / 15.0, 2.0 / 15.0];
        let n: [f64; 4] = [3.0, 2.0, 1.0, 1.0];
        let expected: f64 = f.iter().zip(n).map(|(f, n)| f * (7.0 * f / n).ln()).sum();
        assert!((kl_divergence(&t, 7) - expected).abs() < 1e-15);
        assert!((expected - 0.012_100_150_13).abs() < 1e-10);
    }

    #[test]
    fn expected_bits_examples() {
        let a = ab();
        assert_eq!(expected_bits(&a, 1, &CodecState::from(1)).unwrap(), 1.0);
        // C(a, 0) = 0 and C(b, 0) = 1 both keep the single bit of bits(0).
        assert_eq!(expected_bits(&a, 1, &CodecState::from(0)).unwrap(), 0.0);
        let t = rbgy();
        let eb = expected_bits(&t, 4, &CodecState::from(1000)).unwrap();
        let h = shannon_entropy(t.freq(), 2.0);
        let d = 13.0 / 15.0;
        assert!((eb - h).abs() <= entropy_envelope(t.freq(), 4, 1000, d));
    }

    #[test]
    fn big_states_agree_with_machine_states() {
        let t = rbgy();
        let small = expected_bits(&t, 3, &CodecState::from(12345)).unwrap();
        let probs = [0.4, 4.0 / 15.0, 0.2, 2.0 / 15.0];
        let big = (walk_big(&t, &probs, 3, &BigUint::from(12345u32)) - 14.0) / 3.0;
        assert!((big - small).abs() < 1e-12);
        let huge = CodecState(BigUint::from(1u32) << 200u32);
        assert!(expected_bits(&t, 2, &huge).unwrap() > 0.0);
    }

    #[test]
    fn enumeration_limit() {
        let t = rbgy();
        assert!(matches!(
            expected_bits(&t, 12, &CodecState::from(1)),
            Err(Error::EnumerationTooLarge(_))
        ));
    }
}

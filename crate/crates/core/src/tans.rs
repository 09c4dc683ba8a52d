//! Tabled ANS over the periodic extension of an [`Allocation`].
//!
//! `C(s, n)` is the position of the `(n+1)`-th occurrence of `s`, and
//! `D(n) = (A[n], rank(A[n], n) − 1)` inverts it. States are unbounded.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::alloc::Allocation;
use crate::error::Result;

/// An already encoded message.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CodecState(pub BigUint);

impl From<u64> for CodecState {
    fn from(v: u64) -> Self {
        CodecState(BigUint::from(v))
    }
}

impl fmt::Display for CodecState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn encode_symbol(alloc: &Allocation, sym: &str, n: &CodecState) -> Result<CodecState> {
    let idx = alloc.freq().index_of(sym)?;
    Ok(CodecState(encode_big(alloc, idx, &n.0)))
}

pub(crate) fn encode_big(alloc: &Allocation, idx: usize, n: &BigUint) -> BigUint {
    let (periods, k) = n.div_rem(&BigUint::from(alloc.freq().count(idx)));
    let k = k.to_usize().expect("remainder below count");
    periods * alloc.period() + alloc.occurrences(idx)[k]
}

/// `C(s, n)` on machine integers; `None` on overflow.
pub(crate) fn encode_u128(alloc: &Allocation, idx: usize, n: u128) -> Option<u128> {
    let c = alloc.freq().count(idx) as u128;
    (n / c)
        .checked_mul(alloc.period() as u128)?
        .checked_add(alloc.occurrences(idx)[(n % c) as usize] as u128)
}

pub(crate) fn decode_big(alloc: &Allocation, n: &BigUint) -> (usize, BigUint) {
    let (periods, pos) = n.div_rem(&BigUint::from(alloc.period()));
    let pos = pos.to_u64().expect("remainder below period");
    let idx = alloc.symbol_at(pos);
    let within = alloc.occurrences(idx).partition_point(|&p| p <= pos) as u64;
    (idx, periods * alloc.freq().count(idx) + (within - 1))
}

pub fn decode_symbol<'a>(alloc: &'a Allocation, n: &CodecState) -> (&'a str, CodecState) {
    let (idx, m) = decode_big(alloc, &n.0);
    (alloc.freq().symbol(idx), CodecState(m))
}

/// `C(s₁⋯s_k, n) = C(s₁, C(s₂⋯s_k, n))`; the last symbol is encoded first.
pub fn encode_word<S: AsRef<str>>(alloc: &Allocation, word: &[S], n: &CodecState) -> Result<CodecState> {
    let mut state = n.0.clone();
    for sym in word.iter().rev() {
        let idx = alloc.freq().index_of(sym.as_ref())?;
        state = encode_big(alloc, idx, &state);
    }
    Ok(CodecState(state))
}

/// Decodes `m` symbols, returned in the order they appear in the word.
pub fn decode_word<'a>(alloc: &'a Allocation, n: &CodecState, m: usize) -> (Vec<&'a str>, CodecState) {
    let mut state = n.0.clone();
    let mut word = Vec::with_capacity(m);
    for _ in 0..m {
        let (idx, next) = decode_big(alloc, &state);
        word.push(alloc.freq().symbol(idx));
        state = next;
    }
    (word, CodecState(state))
}

/// Bit length with `bits(0) = 1`.
pub fn bits(n: &CodecState) -> u64 {
    n.0.bits().max(1)
}

/// `C̃(w, 0)` with `C̃(s, n) = C(s, n) + 1`: a bijection from words onto
/// the non-negative integers.
pub fn shifted_encode<S: AsRef<str>>(alloc: &Allocation, word: &[S]) -> Result<BigUint> {
    let mut state = BigUint::zero();
    for sym in word.iter().rev() {
        let idx = alloc.freq().index_of(sym.as_ref())?;
        state = encode_big(alloc, idx, &state) + 1u32;
    }
    Ok(state)
}

/// Inverse of [`shifted_encode`].
pub fn shifted_decode<'a>(alloc: &'a Allocation, m: &BigUint) -> Vec<&'a str> {
    let mut state = m.clone();
    let mut word = Vec::new();
    while !state.is_zero() {
        let (idx, next) = decode_big(alloc, &(state - 1u32));
        word.push(alloc.freq().symbol(idx));
        state = next;
    }
    word
}

//! Streamed ANS: the state lives in `I = [M, BM − 1]` and base-`B` digits
//! move between the state and a digit stream to keep it there.

use std::collections::VecDeque;

use crate::alloc::Allocation;
use crate::error::{Error, Result};

/// Interval and per-symbol preimages for a fixed table, base and `M`.
#[derive(Debug, Clone)]
pub struct StreamConfig {
    alloc: Allocation,
    base: u32,
    start: u64,
    /// `I_s = [M·f(s), B·M·f(s) − 1]`, inclusive bounds.
    sub: Vec<(u64, u64)>,
}

/// Codec state plus the digit stream; the front of `digits` is the most
/// recently written digit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StreamState {
    pub x: u64,
    pub digits: VecDeque<u32>,
}

impl StreamState {
    pub fn new(x: u64) -> Self {
        StreamState {
            x,
            digits: VecDeque::new(),
        }
    }
}

impl StreamConfig {
    pub fn new(alloc: &Allocation, base: u64, start: u64) -> Result<Self> {
        if base < 2 {
            return Err(Error::BaseTooSmall(base));
        }
        let base = u32::try_from(base).map_err(|_| Error::Overflow("base"))?;
        let q = alloc.period();
        if start == 0 || start % q != 0 {
            return Err(Error::PeriodDoesNotDivide { period: q, start });
        }
        start
            .checked_mul(base as u64)
            .ok_or(Error::Overflow("B·M"))?;
        let sub = alloc
            .freq()
            .counts()
            .iter()
            .map(|&c| {
                let lo = start / q * c;
                (lo, lo * base as u64 - 1)
            })
            .collect();
        Ok(StreamConfig {
            alloc: alloc.clone(),
            base,
            start,
            sub,
        })
    }

    pub fn alloc(&self) -> &Allocation {
        &self.alloc
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    /// `M`.
    pub fn start(&self) -> u64 {
        self.start
    }

    /// Inclusive bounds of `I`.
    pub fn interval(&self) -> (u64, u64) {
        (self.start, self.start * self.base as u64 - 1)
    }

    /// Number of states in `I`.
    pub fn interval_len(&self) -> usize {
        (self.start * (self.base as u64 - 1)) as usize
    }

    /// Inclusive bounds of `I_s`.
    pub fn symbol_interval(&self, idx: usize) -> (u64, u64) {
        self.sub[idx]
    }

    /// `λ_s = ⌈−log_B f(s)⌉`, the smallest `λ ≥ 0` with `c_s·B^λ ≥ Q`.
    pub fn digits_per_symbol(&self, idx: usize) -> u32 {
        let q = self.alloc.period() as u128;
        let mut scaled = self.alloc.freq().count(idx) as u128;
        let mut lambda = 0;
        while scaled < q {
            scaled *= self.base as u128;
            lambda += 1;
        }
        lambda
    }

    fn check(&self, x: u64) -> Result<()> {
        let (low, high) = self.interval();
        if x < low || x > high {
            return Err(Error::StateOutOfInterval {
                state: x,
                low,
                high,
            });
        }
        Ok(())
    }

    /// `C(s, x)` for `x ∈ I_s`; lands in `I`.
    fn encode(&self, idx: usize, x: u64) -> u64 {
        let c = self.alloc.freq().count(idx);
        (x / c) * self.alloc.period() + self.alloc.occurrences(idx)[(x % c) as usize]
    }

    fn decode(&self, x: u64) -> (usize, u64) {
        let q = self.alloc.period();
        let pos = x % q;
        let idx = self.alloc.symbol_at(pos);
        let within = self.alloc.occurrences(idx).partition_point(|&p| p <= pos) as u64;
        (idx, (x / q) * self.alloc.freq().count(idx) + within - 1)
    }

    /// State after pushing `idx` from `x` with the stream dropped.
    pub fn next_state(&self, idx: usize, x: u64) -> u64 {
        let (_, high) = self.sub[idx];
        let mut y = x;
        while y > high {
            y /= self.base as u64;
        }
        self.encode(idx, y)
    }

    pub fn push_symbol(&self, sym: &str, st: &mut StreamState) -> Result<()> {
        let idx = self.alloc.freq().index_of(sym)?;
        self.push_index(idx, st).map(|_| ())
    }

    /// Pushes a symbol index; returns how many digits were written.
    pub fn push_index(&self, idx: usize, st: &mut StreamState) -> Result<usize> {
        self.check(st.x)?;
        let (_, high) = self.sub[idx];
        let b = self.base as u64;
        let mut y = st.x;
        let mut written = 0;
        // Digits come off least significant first; pushing each to the
        // front leaves the block most-significant-first.
        while y > high {
            st.digits.push_front((y % b) as u32);
            y /= b;
            written += 1;
        }
        st.x = self.encode(idx, y);
        Ok(written)
    }

    pub fn pop_symbol(&self, st: &mut StreamState) -> Result<&str> {
        let idx = self.pop_index(st)?;
        Ok(self.alloc.freq().symbol(idx))
    }

    /// Pops one symbol index. On error the state is left untouched.
    pub fn pop_index(&self, st: &mut StreamState) -> Result<usize> {
        self.check(st.x)?;
        let (idx, mut m) = self.decode(st.x);
        let b = self.base as u64;
        let mut used = 0;
        while m < self.start {
            let d = *st.digits.get(used).ok_or(Error::StreamExhausted)?;
            m = m * b + d as u64;
            used += 1;
        }
        st.digits.drain(..used);
        st.x = m;
        Ok(idx)
    }

    /// Pushes `word` front to back.
    pub fn push_word<S: AsRef<str>>(&self, word: &[S], st: &mut StreamState) -> Result<()> {
        for sym in word {
            self.push_symbol(sym.as_ref(), st)?;
        }
        Ok(())
    }

    /// Pops `m` symbols and returns them in the order they were pushed.
    pub fn pop_word(&self, st: &mut StreamState, m: usize) -> Result<Vec<&str>> {
        let mut word = Vec::with_capacity(m);
        for _ in 0..m {
            word.push(self.pop_symbol(st)?);
        }
        word.reverse();
        Ok(word)
    }
}

/// Shorthand for [`StreamConfig::new`].
pub fn make_config(alloc: &Allocation, base: u64, start: u64) -> Result<StreamConfig> {
    StreamConfig::new(alloc, base, start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alloc::tests::rbgy;
    use crate::alloc::validate_allocation;
    use crate::freq::FrequencyTable;

    fn ab() -> Allocation {
        let ft = FrequencyTable::new([("a", 1), ("b", 1)]).unwrap();
        validate_allocation(&["a", "b"], &ft).unwrap()
    }

    fn state(x: u64, digits: &[u32]) -> StreamState {
        StreamState {
            x,
            digits: digits.iter().copied().collect(),
        }
    }

    #[test]
    fn config_examples() {
        let cfg = make_config(&rbgy(), 2, 15).unwrap();
        assert_eq!(cfg.interval(), (15, 29));
        assert_eq!(cfg.symbol_interval(0), (6, 11));
        assert_eq!(cfg.symbol_interval(3), (2, 3));
        assert!(matches!(
            make_config(&rbgy(), 2, 16),
            Err(Error::PeriodDoesNotDivide { .. })
        ));
        assert_eq!(make_config(&rbgy(), 1, 15).unwrap_err(), Error::BaseTooSmall(1));
        assert_eq!(
            make_config(&rbgy(), 2, 15 << 60).unwrap_err(),
            Error::Overflow("B·M")
        );
        let cfg = make_config(&ab(), 2, 2).unwrap();
        assert_eq!(cfg.interval(), (2, 3));
        assert_eq!(cfg.symbol_interval(0), (1, 1));
        assert_eq!(cfg.symbol_interval(1), (1, 1));
    }

    #[test]
    fn push_examples() {
        let cfg = make_config(&rbgy(), 2, 15).unwrap();
        let mut st = StreamState::new(20);
        cfg.push_symbol("r", &mut st).unwrap();
        assert_eq!(st, state(25, &[0]));
        let mut st = StreamState::new(15);
        cfg.push_symbol("y", &mut st).unwrap();
        assert_eq!(st, state(29, &[1, 1]));

        let cfg = make_config(&ab(), 2, 2).unwrap();
        let mut st = StreamState::new(2);
        cfg.push_symbol("a", &mut st).unwrap();
        assert_eq!(st, state(2, &[0]));
    }

    #[test]
    fn push_rejects_state_outside_interval() {
        let cfg = make_config(&rbgy(), 2, 15).unwrap();
        let mut st = StreamState::new(30);
        assert!(matches!(
            cfg.push_symbol("r", &mut st),
            Err(Error::StateOutOfInterval { .. })
        ));
    }

    #[test]
    fn pop_examples() {
        let cfg = make_config(&rbgy(), 2, 15).unwrap();
        let mut st = state(29, &[1, 1]);
        assert_eq!(cfg.pop_symbol(&mut st), Ok("y"));
        assert_eq!(st, state(15, &[]));
        let mut st = state(25, &[0]);
        assert_eq!(cfg.pop_symbol(&mut st), Ok("r"));
        assert_eq!(st, state(20, &[]));
        let mut st = state(16, &[]);
        assert_eq!(cfg.pop_symbol(&mut st), Err(Error::StreamExhausted));
        assert_eq!(st, state(16, &[]));
    }

    #[test]
    fn word_roundtrips() {
        let cfg = make_config(&ab(), 2, 2).unwrap();
        let mut st = StreamState::new(2);
        let empty: [&str; 0] = [];
        cfg.push_word(&empty, &mut st).unwrap();
        assert_eq!(st, StreamState::new(2));
        cfg.push_word(&["a", "b"], &mut st).unwrap();
        assert_eq!(cfg.pop_word(&mut st, 2).unwrap(), ["a", "b"]);
        assert_eq!(st, StreamState::new(2));

        let cfg = make_config(&rbgy(), 2, 15).unwrap();
        let mut st = StreamState::new(15);
        cfg.push_word(&["r", "y"], &mut st).unwrap();
        assert_eq!(cfg.pop_word(&mut st, 2).unwrap(), ["r", "y"]);
        assert_eq!(st, StreamState::new(15));
    }

    #[test]
    fn lambda_values() {
        let cfg = make_config(&rbgy(), 2, 15).unwrap();
        // f = 6/15, 4/15, 3/15, 2/15
        let l: Vec<u32> = (0..4).map(|s| cfg.digits_per_symbol(s)).collect();
        assert_eq!(l, [2, 2, 3, 3]);
        let one = validate_allocation(&["a"], &FrequencyTable::new([("a", 1)]).unwrap()).unwrap();
        assert_eq!(make_config(&one, 4, 3).unwrap().digits_per_symbol(0), 0);
    }
}

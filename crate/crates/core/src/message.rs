//! Binary container for streamed-ANS messages.
//!
//! Layout, integers little-endian:
//!
//! ```text
//! "ANS1" | B: u8 | M: u64 | symbols: u64 | state: u64 | digits: u64 | packed digits
//! ```
//!
//! Each digit takes `w = ⌈log₂ B⌉` bits and `⌊8 / w⌋` digits share a byte.
//! The front digit of the stream sits in the most significant bits of the
//! first byte; unused low bits of a byte are zero.

use crate::alloc::Allocation;
use crate::error::{Error, Result};
use crate::stream::{StreamConfig, StreamState};

pub const MAGIC: &[u8; 4] = b"ANS1";
const HEADER_LEN: usize = 4 + 1 + 8 * 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Message {
    pub base: u8,
    pub start: u64,
    pub symbols: u64,
    pub state: u64,
    pub digits: Vec<u32>,
}

fn digit_width(base: u8) -> u32 {
    32 - (base as u32 - 1).leading_zeros()
}

impl Message {
    /// Encodes `word` starting from the state `M` with an empty stream.
    pub fn encode<S: AsRef<str>>(cfg: &StreamConfig, word: &[S]) -> Result<Self> {
        let base = u8::try_from(cfg.base()).map_err(|_| Error::Overflow("base does not fit in a byte"))?;
        let mut st = StreamState::new(cfg.start());
        cfg.push_word(word, &mut st)?;
        Ok(Message {
            base,
            start: cfg.start(),
            symbols: word.len() as u64,
            state: st.x,
            digits: st.digits.into_iter().collect(),
        })
    }

    /// Decodes the message against `alloc`, checking that the decoder ends
    /// in the encoder's initial state.
    pub fn decode<'a>(&self, alloc: &'a Allocation) -> Result<Vec<&'a str>> {
        let cfg = StreamConfig::new(alloc, self.base as u64, self.start)?;
        let mut st = StreamState {
            x: self.state,
            digits: self.digits.iter().copied().collect(),
        };
        let len = usize::try_from(self.symbols).map_err(|_| Error::Overflow("symbol count"))?;
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            let idx = cfg.pop_index(&mut st)?;
            out.push(alloc.freq().symbol(idx));
        }
        out.reverse();
        if st.x != self.start || !st.digits.is_empty() {
            return Err(Error::Format("trailing state after decoding".into()));
        }
        Ok(out)
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let w = digit_width(self.base);
        let per_byte = (8 / w) as usize;
        let mut out = Vec::with_capacity(HEADER_LEN + self.digits.len() / per_byte + 1);
        out.extend_from_slice(MAGIC);
        out.push(self.base);
        for v in [self.start, self.symbols, self.state, self.digits.len() as u64] {
            out.extend_from_slice(&v.to_le_bytes());
        }
        for chunk in self.digits.chunks(per_byte) {
            let mut byte = 0u8;
            for (j, &d) in chunk.iter().enumerate() {
                byte |= (d as u8) << (8 - w * (j as u32 + 1));
            }
            out.push(byte);
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < HEADER_LEN || &bytes[..4] != MAGIC {
            return Err(Error::Format("missing ANS1 header".into()));
        }
        let base = bytes[4];
        if base < 2 {
            return Err(Error::BaseTooSmall(base as u64));
        }
        let word = |i: usize| {
            let off = 5 + 8 * i;
            u64::from_le_bytes(bytes[off..off + 8].try_into().expect("eight bytes"))
        };
        let (start, symbols, state, count) = (word(0), word(1), word(2), word(3));
        let w = digit_width(base);
        let per_byte = (8 / w) as u64;
        let body = &bytes[HEADER_LEN..];
        if body.len() as u64 != count.div_ceil(per_byte) {
            return Err(Error::Format(format!(
                "expected {} digit bytes, found {}",
                count.div_ceil(per_byte),
                body.len()
            )));
        }
        let mask = (1u32 << w) - 1;
        let mut digits = Vec::with_capacity(count as usize);
        for i in 0..count {
            let byte = body[(i / per_byte) as usize] as u32;
            let j = (i % per_byte) as u32;
            let d = (byte >> (8 - w * (j + 1))) & mask;
            if d >= base as u32 {
                return Err(Error::Format(format!("digit {d} out of range for base {base}")));
            }
            digits.push(d);
        }
        Ok(Message {
            base,
            start,
            symbols,
            state,
            digits,
        })
    }
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("symbol `{0}` has a non-positive count")]
    NonPositiveCount(String),
    #[error("symbol `{0}` appears more than once")]
    DuplicateSymbol(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("occurrence ordinals start at 1")]
    NonPositiveOrdinal,
    #[error("table has length {actual}, expected {expected}")]
    LengthMismatch { expected: u64, actual: u64 },
    #[error("symbol `{symbol}` occurs {actual} times, expected {expected}")]
    CountMismatch {
        symbol: String,
        expected: u64,
        actual: u64,
    },
    #[error("renormalization base must be at least 2, got {0}")]
    BaseTooSmall(u64),
    #[error("table length {period} does not divide interval start {start}")]
    PeriodDoesNotDivide { period: u64, start: u64 },
    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),
    #[error("state {state} is outside the interval [{low}, {high}]")]
    StateOutOfInterval { state: u64, low: u64, high: u64 },
    #[error("digit stream exhausted before the state returned to the interval")]
    StreamExhausted,
    #[error("numerical instability: {0}")]
    NumericalInstability(String),
    #[error("enumeration of {0} words exceeds the limit")]
    EnumerationTooLarge(u128),
    #[error("malformed input: {0}")]
    Format(String),
}

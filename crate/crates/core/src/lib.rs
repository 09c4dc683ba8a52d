//! Asymmetric numeral systems over periodic symbol tables.
//!
//! A [`FrequencyTable`] fixes integer symbol counts; an [`Allocation`]
//! spreads them over a table of length `Q`. [`allocators`] builds tables,
//! [`tans`] and [`stream`] encode with them, and [`analysis`] measures how
//! well a table tracks the target frequencies.

pub mod alloc;
pub mod allocators;
pub mod analysis;
pub mod error;
pub mod freq;
pub mod message;
pub mod stream;
pub mod tans;

pub use alloc::{validate_allocation, Allocation, TableFile};
pub use allocators::{generate, Algorithm, StreamParams};
pub use error::{Error, Result};
pub use freq::FrequencyTable;
pub use message::Message;
pub use stream::{StreamConfig, StreamState};
pub use tans::CodecState;

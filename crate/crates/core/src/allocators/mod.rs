//! Table generators.
//!
//! `ranged` and the two `duda` variants are the classical constructions;
//! `edf`, `shifted_priorities` and `greedy_discrepancy` keep the
//! discrepancy `|f(s)N − n(s,N)|` at most one for every prefix length `N`;
//! `dube_yokoo` refines a table against the dynamics of the streamed codec.
//!
//! All generators are deterministic: ties are broken by the symbol
//! construction order of the [`FrequencyTable`].

mod criteria;
mod deadlines;
mod dube_yokoo;
mod duda;
mod edf;
mod greedy;
mod ranged;
mod shifted;

use std::fmt;
use std::str::FromStr;

pub use criteria::verify_theorem_criteria;
pub use dube_yokoo::dube_yokoo;
pub use duda::{duda, DudaVariant};
pub use edf::{edf, edf_sequence};
pub use greedy::{greedy_discrepancy, greedy_discrepancy_sequence};
pub use ranged::ranged;
pub use shifted::{shifted_priorities, shifted_priorities_sequence};

use crate::alloc::Allocation;
use crate::error::{Error, Result};
use crate::freq::FrequencyTable;

/// Every generator exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Ranged,
    /// Heap initialised at `1/f(s)`.
    Duda09,
    /// Heap initialised at `1/(2f(s))`.
    Duda13,
    Edf,
    Shifted,
    Greedy,
    DubeYokoo,
}

impl Algorithm {
    pub const ALL: [Algorithm; 7] = [
        Algorithm::Ranged,
        Algorithm::Duda09,
        Algorithm::Duda13,
        Algorithm::Edf,
        Algorithm::Shifted,
        Algorithm::Greedy,
        Algorithm::DubeYokoo,
    ];

    /// Generators whose output satisfies the scheduling criteria.
    pub const BOUNDED: [Algorithm; 3] = [Algorithm::Edf, Algorithm::Shifted, Algorithm::Greedy];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Ranged => "ranged",
            Algorithm::Duda09 => "duda09",
            Algorithm::Duda13 => "duda13",
            Algorithm::Edf => "edf",
            Algorithm::Shifted => "shifted",
            Algorithm::Greedy => "greedy",
            Algorithm::DubeYokoo => "dube-yokoo",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Format(format!("unknown algorithm `{s}`")))
    }
}

/// Parameters only the Dubé–Yokoo refinement uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StreamParams {
    pub base: u32,
    pub max_iters: usize,
}

impl Default for StreamParams {
    fn default() -> Self {
        StreamParams {
            base: 2,
            max_iters: 100,
        }
    }
}

/// Runs `alg` on `ft`.
pub fn generate(alg: Algorithm, ft: &FrequencyTable, params: StreamParams) -> Result<Allocation> {
    match alg {
        Algorithm::Ranged => Ok(ranged(ft)),
        Algorithm::Duda09 => Ok(duda(ft, DudaVariant::One)),
        Algorithm::Duda13 => Ok(duda(ft, DudaVariant::Half)),
        Algorithm::Edf => Ok(edf(ft)),
        Algorithm::Shifted => Ok(shifted_priorities(ft)),
        Algorithm::Greedy => Ok(greedy_discrepancy(ft)),
        Algorithm::DubeYokoo => dube_yokoo(ft, params.base, params.max_iters),
    }
}

fn into_allocation(ft: &FrequencyTable, table: Vec<usize>) -> Allocation {
    Allocation::from_indices(ft.clone(), table).expect("generator emits exact counts")
}

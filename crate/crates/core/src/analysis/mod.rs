//! Quantitative metrics for tables and codecs.
//!
//! Discrepancy and relative excess are exact. Entropy, divergence, the
//! Markov-chain quantities and profiles are floating point.

mod discrepancy;
mod entropy;
mod excess;
mod markov;
mod profile;

pub use discrepancy::{
    duda_bound_holds, max_deviation, max_discrepancy, nth_occurrence_bound_holds,
};
pub use entropy::{
    entropy_envelope, expected_bits, kl_divergence, kl_discrepancy_bound, shannon_entropy,
    ENUMERATION_LIMIT,
};
pub use excess::relative_excess;
pub use markov::{
    eigen_gap, entropy_loss, expected_word_length, invariant_measure, residual,
    transition_matrix, MarkovModel, MAX_POWER_ITERATIONS, RESIDUAL_TOLERANCE,
};
pub use profile::{performance_profile, ProfileCurve};

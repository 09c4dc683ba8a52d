//! Benchmark fixtures shared by the criterion targets.

use anstab::FrequencyTable;

/// Counts `1..=8`.
pub fn linear() -> FrequencyTable {
    FrequencyTable::from_counts(&[1, 2, 3, 4, 5, 6, 7, 8]).unwrap()
}

/// The first eight Fibonacci numbers.
pub fn fibonacci() -> FrequencyTable {
    FrequencyTable::from_counts(&[1, 1, 2, 3, 5, 8, 13, 21]).unwrap()
}

/// Pseudo-random word over `k` symbols from a fixed linear congruential
/// sequence.
pub fn word(k: usize, len: usize) -> Vec<usize> {
    let mut x: u64 = 0x9e37_79b9_7f4a_7c15;
    (0..len)
        .map(|_| {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((x >> 33) % k as u64) as usize
        })
        .collect()
}

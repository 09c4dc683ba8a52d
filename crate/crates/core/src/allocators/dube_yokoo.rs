use std::collections::HashSet;

use super::{into_allocation, ranged};
use crate::alloc::Allocation;
use crate::analysis::{expected_word_length, invariant_measure, transition_matrix};
use crate::error::Result;
use crate::freq::FrequencyTable;
use crate::stream::StreamConfig;

/// Iterative refinement against the streamed codec with `M = Q`.
///
/// Starting from [`ranged`], each round computes the invariant measure of
/// the stream chain, stably sorts table positions by descending mass and
/// rearranges the table in that order. The loop ends on a repeated table or
/// after `max_iters` rounds; the visited table with the smallest expected
/// word length is returned. States `x` of `I` are charged to position
/// `x mod Q`, which is a bijection when `B = 2`.
pub fn dube_yokoo(ft: &FrequencyTable, base: u32, max_iters: usize) -> Result<Allocation> {
    let q = ft.period() as usize;
    let mut current = ranged(ft);
    let mut seen = HashSet::new();
    let mut best: Option<(f64, Allocation)> = None;
    for _ in 0..max_iters {
        if !seen.insert(current.indices().to_vec()) {
            break;
        }
        let cfg = StreamConfig::new(&current, base as u64, q as u64)?;
        let p = invariant_measure(&transition_matrix(&cfg))?;
        let ewl = expected_word_length(&cfg, &p);
        if best.as_ref().is_none_or(|(b, _)| ewl < *b) {
            best = Some((ewl, current.clone()));
        }

        let mut mass = vec![0.0; q];
        for (i, v) in p.iter().enumerate() {
            mass[(q + i) % q] += v;
        }
        let mut order: Vec<usize> = (0..q).collect();
        order.sort_by(|&a, &b| mass[b].total_cmp(&mass[a]));
        let table = order.iter().map(|&i| current.indices()[i]).collect();
        current = into_allocation(ft, table);
    }
    Ok(match best {
        Some((_, a)) => a,
        None => current,
    })
}

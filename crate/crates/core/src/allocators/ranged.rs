use super::into_allocation;
use crate::alloc::Allocation;
use crate::freq::FrequencyTable;

/// Symbols in descending count order, each repeated `c_s` times in one
/// contiguous run. Equal counts keep their construction order.
pub fn ranged(ft: &FrequencyTable) -> Allocation {
    let mut order: Vec<usize> = (0..ft.len()).collect();
    order.sort_by_key(|&s| std::cmp::Reverse(ft.count(s)));
    let table = order
        .into_iter()
        .flat_map(|s| std::iter::repeat_n(s, ft.count(s) as usize))
        .collect();
    into_allocation(ft, table)
}

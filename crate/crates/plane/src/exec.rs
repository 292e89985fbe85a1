//! Data-parallel work splitting for the O(n^2) pair loops.
//!
//! Counts are sums of per-row subtotals, so they are identical for any split
//! of the index range; the sequential body is the compiled fallback when the
//! `parallel` feature is off.

#[cfg(feature = "parallel")]
pub(crate) fn sum_indexed<F>(n: usize, f: F) -> u64
where
    F: Fn(usize) -> u64 + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).sum()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn sum_indexed<F>(n: usize, f: F) -> u64
where
    F: Fn(usize) -> u64 + Sync + Send,
{
    sum_indexed_seq(n, f)
}

pub(crate) fn sum_indexed_seq<F>(n: usize, f: F) -> u64
where
    F: Fn(usize) -> u64,
{
    (0..n).map(f).sum()
}

//! Parallel/sequential execution switch.
//!
//! Every hot loop in the crate funnels through these helpers. With the
//! `parallel` feature they fan out on rayon; without it they run on plain
//! iterators. Reductions are order-independent (exact integer sums) or
//! order-preserving (`collect`), so both modes produce identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(crate) fn map_slice<T: Sync, R: Send>(
    items: &[T],
    f: impl Fn(&T) -> R + Sync + Send,
) -> Vec<R> {
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

pub(crate) fn map_range<R: Send>(n: usize, f: impl Fn(usize) -> R + Sync + Send) -> Vec<R> {
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

pub(crate) fn sum_range_u64(n: usize, f: impl Fn(usize) -> u64 + Sync + Send) -> u64 {
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).sum()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).sum()
    }
}

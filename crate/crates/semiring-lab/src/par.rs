//! Data-parallel scan helpers with a sequential fallback.
//!
//! With the `parallel` feature (the default) these fan out over rayon's
//! pool; without it they run as plain iterator chains. Both paths reduce
//! with `min`, so results are identical regardless of thread count or
//! schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Smallest `Some` value of `f` over `0..count`.
#[cfg(feature = "parallel")]
pub(crate) fn min_find<T, F>(count: usize, f: F) -> Option<T>
where
    T: Ord + Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    (0..count).into_par_iter().filter_map(f).min()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn min_find<T, F>(count: usize, f: F) -> Option<T>
where
    T: Ord,
    F: Fn(usize) -> Option<T>,
{
    (0..count).filter_map(f).min()
}

/// Apply `f` to every index and concatenate the results in index order.
#[cfg(feature = "parallel")]
pub(crate) fn flat_map_indexed<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> Vec<T> + Sync + Send,
{
    (0..count).into_par_iter().flat_map_iter(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn flat_map_indexed<T, F>(count: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> Vec<T>,
{
    (0..count).flat_map(f).collect()
}

/// Map `f` over every index, preserving index order.
#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..count).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<T, F>(count: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..count).map(f).collect()
}

//! Execution strategy for the data-parallel sweeps: the splitting formula's
//! candidate evaluation and the residual sweep across degrees.
//!
//! With the `parallel` feature (the default) the mapped evaluations run on
//! rayon; without it they run on plain iterators. Element order is preserved
//! and everything combined downstream is exact integer arithmetic, so the
//! results are identical under either strategy and any thread schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
{
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
{
    items.into_iter().map(f).collect()
}

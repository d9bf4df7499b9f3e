//! Data-parallel mapping with a sequential fallback.
//!
//! The heavy operations (grid sweeps, per-degree reports, genus audits) are
//! embarrassingly parallel maps over independent inputs.  With the `parallel`
//! feature (on by default) they fan out through rayon; without it they run as
//! plain iterator maps.  Output order matches input order either way, and the
//! `_seq` twin stays available under both configurations so the two paths can
//! be compared and benchmarked directly.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, in parallel when the `parallel` feature is enabled.
pub fn map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

/// Sequential twin of [`map`], always single-threaded.
pub fn map_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

//! Data-parallel execution helpers.
//!
//! Hot loops (radical Gram matrices, candidate searches, oracle batteries)
//! run through [`map_collect`]. With the `parallel` feature enabled the work
//! is spread over rayon; without it, or after [`set_sequential`]`(true)`, the
//! same closure runs on one thread. Results are identical either way since
//! every loop body is a pure function and output order is preserved.

use std::sync::atomic::{AtomicBool, Ordering};

static FORCE_SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Force single-threaded execution even when the `parallel` feature is on.
pub fn set_sequential(seq: bool) {
    FORCE_SEQUENTIAL.store(seq, Ordering::Relaxed);
}

pub fn is_sequential() -> bool {
    FORCE_SEQUENTIAL.load(Ordering::Relaxed)
}

#[cfg(feature = "parallel")]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    if is_sequential() {
        items.into_iter().map(f).collect()
    } else {
        items.into_par_iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

//! Execution strategy: data-parallel map over independent subproblems when
//! the `parallel` feature is enabled, plain sequential iteration otherwise.
//!
//! With the feature on, parallelism can still be switched off at runtime
//! (`set_parallel(false)`); the benchmark suite uses this to compare both
//! strategies on one build.

use std::sync::atomic::{AtomicBool, Ordering};

static PARALLEL: AtomicBool = AtomicBool::new(cfg!(feature = "parallel"));

/// Whether work is currently dispatched through the parallel path.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && PARALLEL.load(Ordering::Relaxed)
}

/// Enables or disables parallel dispatch at runtime.  A no-op without the
/// `parallel` feature.
pub fn set_parallel(enabled: bool) {
    PARALLEL.store(enabled, Ordering::Relaxed);
}

/// Applies `f` to every item and collects the results in input order.
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        use rayon::prelude::*;
        return items.into_par_iter().map(f).collect();
    }
    items.into_iter().map(f).collect()
}

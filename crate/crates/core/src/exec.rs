//! Execution policy for data-parallel work.
//!
//! Every sweep in the crate goes through [`map`], so the sequential and
//! rayon paths produce the same values in the same order.

/// How a batch of independent evaluations is scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled; otherwise falls
    /// back to sequential evaluation.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// Apply `f` to every item, preserving input order in the output.
pub fn map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// True when [`Exec::Parallel`] actually runs on a thread pool.
pub const fn parallel_available() -> bool {
    cfg!(feature = "parallel")
}

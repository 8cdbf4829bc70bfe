//! Data-parallel helpers. With the `parallel` feature disabled every
//! [`Exec::Parallel`] request runs sequentially.

use crate::{Error, Result};

/// Execution strategy for the embarrassingly parallel loops of the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

pub fn parallel_available() -> bool {
    cfg!(feature = "parallel")
}

/// Order-preserving fallible map.
pub fn try_map<T, R, F>(exec: Exec, items: &[T], f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R> + Sync + Send,
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

/// Fallible sum. The result is independent of the thread count.
pub fn try_sum<T, F>(exec: Exec, items: &[T], f: F) -> Result<u64>
where
    T: Sync,
    F: Fn(&T) -> Result<u64> + Sync + Send,
{
    Ok(try_map(exec, items, f)?.into_iter().sum())
}

/// Runs `f` on a dedicated pool of `threads` workers (global pool if `None`).
pub fn with_threads<R, F>(threads: Option<usize>, f: F) -> Result<R>
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    match threads {
        #[cfg(feature = "parallel")]
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))
            .map(|pool| pool.install(f)),
        #[cfg(not(feature = "parallel"))]
        Some(0) => Err(Error::ThreadPool("zero threads".into())),
        _ => Ok(f()),
    }
}

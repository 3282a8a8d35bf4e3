//! Replica scheduling. Results are always returned in replica order, so the
//! worker count only changes wall-clock time.

use crate::error::{Error, Result};

/// How replicas are scheduled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// A dedicated pool with this many worker threads. Without the
    /// `parallel` feature this degrades to sequential execution.
    Parallel {
        workers: usize,
    },
}

impl Execution {
    pub fn with_workers(workers: usize) -> Self {
        if workers <= 1 {
            Execution::Sequential
        } else {
            Execution::Parallel { workers }
        }
    }

    /// Evaluates `job(0..count)` and returns the outputs in index order. On
    /// failure the error of the lowest failing index is reported.
    pub fn map_indexed<T, F>(self, count: usize, job: F) -> Result<Vec<T>>
    where
        T: Send,
        F: Fn(usize) -> Result<T> + Sync + Send,
    {
        let outputs: Vec<Result<T>> = match self {
            Execution::Sequential => (0..count).map(&job).collect(),
            Execution::Parallel { workers } => parallel_map(workers, count, &job)?,
        };
        outputs.into_iter().collect()
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, F>(workers: usize, count: usize, job: &F) -> Result<Vec<Result<T>>>
where
    T: Send,
    F: Fn(usize) -> Result<T> + Sync + Send,
{
    use rayon::prelude::*;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start {workers} workers: {e}")))?;
    Ok(pool.install(|| (0..count).into_par_iter().map(job).collect()))
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, F>(_workers: usize, count: usize, job: &F) -> Result<Vec<Result<T>>>
where
    T: Send,
    F: Fn(usize) -> Result<T> + Sync + Send,
{
    Ok((0..count).map(job).collect())
}

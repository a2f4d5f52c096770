//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) independent tasks run on rayon;
//! without it the same entry points run sequentially. Results are collected
//! by task index, so the outcome is bit-identical regardless of feature or
//! thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..count`, in parallel when the `parallel` feature is on.
pub fn par_map_indexed<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..count).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..count).map(f).collect()
    }
}

/// Sequential reference path for the same mapping; used by the benchmark
/// suite to compare against the parallel path.
pub fn seq_map_indexed<T, F>(count: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..count).map(f).collect()
}

/// Runs `f` inside a dedicated thread pool with `threads` workers
/// (`None` = library default). Without the `parallel` feature the function
/// just runs on the current thread.
pub fn with_thread_cap<T, F>(threads: Option<usize>, f: F) -> T
where
    T: Send,
    F: FnOnce() -> T + Send,
{
    #[cfg(feature = "parallel")]
    {
        match threads {
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .expect("thread pool")
                .install(f),
            None => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        f()
    }
}

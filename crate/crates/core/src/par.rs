//! Data-parallel map with a sequential fallback.
//!
//! Every task receives its own index, and callers derive per-task RNG streams
//! from it, so results do not depend on the execution mode.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    /// `jobs = 0` uses the global pool.
    Parallel { jobs: usize },
    #[default]
    Auto,
}

impl ExecMode {
    pub fn from_jobs(jobs: Option<usize>) -> Self {
        match jobs {
            None => ExecMode::Auto,
            Some(1) => ExecMode::Sequential,
            Some(j) => ExecMode::Parallel { jobs: j },
        }
    }

    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self != ExecMode::Sequential
    }
}

pub fn map_range<U, F>(mode: ExecMode, n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        match mode {
            ExecMode::Sequential => {}
            ExecMode::Auto | ExecMode::Parallel { jobs: 0 } => {
                return (0..n).into_par_iter().map(&f).collect();
            }
            ExecMode::Parallel { jobs } => {
                if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
                    return pool.install(|| (0..n).into_par_iter().map(&f).collect());
                }
            }
        }
    }
    let _ = mode;
    (0..n).map(f).collect()
}

pub fn map_slice<T, U, F>(mode: ExecMode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    map_range(mode, items.len(), |i| f(&items[i]))
}

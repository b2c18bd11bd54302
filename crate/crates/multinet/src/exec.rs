//! Sequential/parallel execution switch.
//!
//! With the `parallel` feature (default) the data-parallel stages fan out
//! over rayon; without it, or with [`ExecMode::Sequential`], they run on
//! one thread. Results are returned in input order either way, so outputs
//! are identical across modes.

/// How data-parallel stages execute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    /// Use the rayon pool when the `parallel` feature is enabled.
    #[default]
    Parallel,
    /// Single-threaded, regardless of features.
    Sequential,
}

impl ExecMode {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == ExecMode::Parallel
    }
}

/// Indexed map preserving input order.
pub fn map_slice<T, U, F>(mode: ExecMode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(&f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// Map over owned values, preserving input order.
pub fn map_vec<T, U, F>(mode: ExecMode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        return items.into_par_iter().map(&f).collect();
    }
    let _ = mode;
    items.into_iter().map(f).collect()
}

//! Index-parallel map helpers.
//!
//! With the `parallel` feature (the default) work is spread over a rayon
//! pool; the `HSK_THREADS` environment variable caps the pool size, and
//! `HSK_THREADS=1` forces the sequential path. Results are always collected
//! in index order, so output never depends on the execution schedule.

#[cfg(feature = "parallel")]
use std::sync::OnceLock;

/// Below this length the rayon dispatch overhead outweighs the work.
#[cfg(feature = "parallel")]
const SEQ_CUTOFF: usize = 32;

#[cfg(feature = "parallel")]
fn thread_cap() -> Option<usize> {
    static CAP: OnceLock<Option<usize>> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("HSK_THREADS")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .filter(|&n| n > 0)
    })
}

#[cfg(feature = "parallel")]
fn capped_pool() -> Option<&'static rayon::ThreadPool> {
    static POOL: OnceLock<Option<rayon::ThreadPool>> = OnceLock::new();
    POOL.get_or_init(|| match thread_cap() {
        Some(n) if n > 1 => rayon::ThreadPoolBuilder::new().num_threads(n).build().ok(),
        _ => None,
    })
    .as_ref()
}

/// Maps `f` over `0..len`, in parallel when enabled and worthwhile.
#[cfg(feature = "parallel")]
pub fn indexed_map<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    use rayon::prelude::*;
    if len < SEQ_CUTOFF || thread_cap() == Some(1) {
        return indexed_map_seq(len, f);
    }
    match capped_pool() {
        Some(pool) => pool.install(|| (0..len).into_par_iter().map(&f).collect()),
        None => (0..len).into_par_iter().map(f).collect(),
    }
}

/// Sequential build: same contract as the parallel version.
#[cfg(not(feature = "parallel"))]
pub fn indexed_map<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    indexed_map_seq(len, f)
}

/// Sequential reference version of [`indexed_map`]; the benches compare
/// against this directly.
pub fn indexed_map_seq<T, F>(len: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..len).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let f = |i: usize| (i * i) as f64 / 7.0;
        assert_eq!(indexed_map(1000, f), indexed_map_seq(1000, f));
    }

    #[test]
    fn empty_map() {
        assert!(indexed_map(0, |i| i).is_empty());
    }
}

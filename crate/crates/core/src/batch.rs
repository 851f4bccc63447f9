//! Batch driver: solve many colourings, emitting one compact summary per
//! instance in input order. With the `parallel` feature (on by default)
//! instances fan out across a rayon thread pool; the sequential fallback is
//! always available and produces identical summaries apart from wall time.

use crate::colouring::Colouring;
use crate::error::Result;
use crate::solver::{partition_le4, Route};

/// One per instance, in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveSummary {
    pub index: usize,
    pub n: usize,
    pub route: Route,
    pub cycle_count: usize,
    pub verified: bool,
    /// Wall time of this instance's solve, in microseconds.
    pub micros: u128,
}

fn solve_one(index: usize, c: &Colouring) -> Result<SolveSummary> {
    let start = std::time::Instant::now();
    let s = partition_le4(c)?;
    Ok(SolveSummary {
        index,
        n: s.n,
        route: s.route,
        cycle_count: s.partition.len(),
        verified: s.verified,
        micros: start.elapsed().as_micros(),
    })
}

/// Solve every colouring one after the other on the calling thread.
pub fn batch_solve_sequential(cs: &[Colouring]) -> Result<Vec<SolveSummary>> {
    cs.iter().enumerate().map(|(i, c)| solve_one(i, c)).collect()
}

/// Solve every colouring using up to `parallelism` worker threads,
/// preserving input order in the output. Instances share no mutable state.
/// Without the `parallel` feature this runs sequentially regardless of
/// `parallelism`.
#[cfg(feature = "parallel")]
pub fn batch_solve(cs: &[Colouring], parallelism: usize) -> Result<Vec<SolveSummary>> {
    use rayon::prelude::*;
    if parallelism <= 1 || cs.len() <= 1 {
        return batch_solve_sequential(cs);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .map_err(|e| crate::error::Error::Internal(format!("thread pool: {e}")))?;
    pool.install(|| cs.par_iter().enumerate().map(|(i, c)| solve_one(i, c)).collect())
}

/// See the `parallel` variant; this build runs sequentially.
#[cfg(not(feature = "parallel"))]
pub fn batch_solve(cs: &[Colouring], _parallelism: usize) -> Result<Vec<SolveSummary>> {
    batch_solve_sequential(cs)
}

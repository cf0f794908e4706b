//! Command-line front end for `hypercauchy-core`: grid evaluation, sampling,
//! verification suites and figure data.

pub mod curve;
pub mod figure;
pub mod format;
pub mod grid;
pub mod output;
pub mod sample;
pub mod verify;

use anyhow::{Context, Result};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "HYPERCAUCHY_THREADS";

/// Worker pool honouring `HYPERCAUCHY_THREADS`; unset or 0 means one
/// thread per core.
pub fn thread_pool() -> Result<rayon::ThreadPool> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => v.trim().parse::<usize>().with_context(|| format!("{THREADS_ENV}={v:?} is not a count"))?,
        Err(_) => 0,
    };
    Ok(rayon::ThreadPoolBuilder::new().num_threads(threads).build()?)
}

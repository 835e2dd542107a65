//! Runs branch searches and independent checks on a fixed-size thread pool.

use mucrit_core::search::{merge, BranchSearch, SearchResult};
use rayon::prelude::*;

use crate::error::{CliError, Result};

pub struct Runner {
    pool: rayon::ThreadPool,
    threads: usize,
}

impl Runner {
    pub fn new(threads: usize) -> Result<Self> {
        if threads == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| CliError::ThreadPool(e.to_string()))?;
        Ok(Runner { pool, threads })
    }

    pub fn threads(&self) -> usize {
        self.threads
    }

    /// Explores every branch in parallel; the merge sorts, so the result is
    /// the same as the sequential one.
    pub fn search<S: BranchSearch>(&self, s: &S) -> mucrit_core::Result<SearchResult<S::Witness>> {
        let branches = s.branches();
        let outcomes: Vec<_> = self.pool.install(|| branches.par_iter().map(|b| s.explore(b)).collect());
        s.finish(merge(outcomes))
    }

    /// Order-preserving parallel map.
    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        self.pool.install(|| items.par_iter().map(f).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mucrit_core::search::{run_sequential, DiffsetSearch};
    use mucrit_core::PrimeField;

    #[test]
    fn parallel_matches_sequential() {
        let s = DiffsetSearch::for_subgroup(PrimeField::new(41).unwrap(), 20).unwrap();
        let seq = run_sequential(&s).unwrap();
        for t in [1, 3, 8] {
            assert_eq!(Runner::new(t).unwrap().search(&s).unwrap(), seq);
        }
    }

    #[test]
    fn zero_threads_rejected() {
        assert!(matches!(Runner::new(0), Err(CliError::Usage(_))));
    }
}

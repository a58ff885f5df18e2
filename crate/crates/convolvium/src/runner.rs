use std::time::Instant;

use convolvium_core::verify::{Report, Suite, SweepRange, Verifier};
use rayon::prelude::*;

/// Conservative throughput used to turn a millisecond budget into work
/// units. Measured debug builds sustain roughly three times this.
pub const UNITS_PER_MS: u64 = 1_000;
pub const DEFAULT_BUDGET_MS: u64 = 60_000;
pub const BUDGET_ENV: &str = "CONVOLVIUM_BUDGET_MS";

/// Budget from the environment, falling back to [`DEFAULT_BUDGET_MS`].
pub fn budget_ms_from_env() -> Result<u64, String> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{BUDGET_ENV}={v:?} is not a number of milliseconds")),
        Err(_) => Ok(DEFAULT_BUDGET_MS),
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Runner {
    pub verifier: Verifier,
    pub jobs: usize,
}

impl Runner {
    pub fn new(jobs: usize, budget_ms: u64) -> Self {
        Runner {
            verifier: Verifier {
                fault: None,
                budget: Some(budget_ms.saturating_mul(UNITS_PER_MS)),
            },
            jobs: jobs.max(1),
        }
    }

    pub fn run_suite(&self, suite: Suite, range: &SweepRange) -> convolvium_core::Result<Report> {
        let start = Instant::now();
        let prepared = self.verifier.prepare(suite, range)?;
        Ok(self.finish(prepared, start))
    }

    /// Like [`Verifier::run_all`]: clamps per suite and never aborts.
    pub fn run_all(&self, range: &SweepRange) -> Vec<Report> {
        Suite::ALL
            .into_iter()
            .map(|suite| {
                let start = Instant::now();
                match self.verifier.prepare_clamped(suite, range) {
                    Ok(p) => self.finish(p, start),
                    Err(e) => Report::failed(suite, range.clamped_for(suite).0, e.to_string()),
                }
            })
            .collect()
    }

    fn finish(&self, prepared: convolvium_core::verify::Prepared, start: Instant) -> Report {
        let results = if self.jobs == 1 {
            prepared.cases().iter().map(|c| prepared.check(c)).collect()
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.jobs)
                .build()
                .expect("thread pool");
            // par_iter().collect() keeps case order
            pool.install(|| {
                prepared
                    .cases()
                    .par_iter()
                    .map(|c| prepared.check(c))
                    .collect()
            })
        };
        let mut report = prepared.finish(results);
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        report
    }
}

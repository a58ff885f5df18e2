//! Parameter sweeps that check each claim exhaustively and collect
//! structured reports.
//!
//! A run is split into [`Verifier::prepare`], which validates the range,
//! checks the work budget and builds any seeded kernels, and the per-case
//! checks in [`Prepared`]. Callers that want parallelism evaluate
//! [`Prepared::cases`] however they like and hand the results back in case
//! order to [`Prepared::finish`].

mod range;
mod report;
mod suite;

use alloc::string::ToString;
use alloc::vec::Vec;
use core::ops::ControlFlow;

pub use range::SweepRange;
pub use report::{Param, ParamValue, Report, Violation, ViolationKind};
pub use suite::{Case, KernelRef, Suite};

use crate::{CustomTable, KernelFamily, Perturbation, Result, SummandKernel};

/// Corrupts every kernel of one family at one point. Test hook.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fault {
    pub family: KernelFamily,
    pub perturbation: Perturbation,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Verifier {
    pub fault: Option<Fault>,
    /// Upper bound on estimated work units, see [`Case::cost`].
    pub budget: Option<u64>,
}

pub(crate) struct Context {
    fault: Option<Fault>,
    customs: Vec<SummandKernel>,
    transplanted: Vec<SummandKernel>,
}

fn custom_seed(seed: u64, index: u64) -> u64 {
    seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

impl Context {
    fn build(fault: Option<Fault>, suite: Suite, range: &SweepRange) -> Result<Self> {
        let mut customs = Vec::new();
        let mut transplanted = Vec::new();
        if matches!(suite, Suite::MSumLift | Suite::Transplant) {
            for i in 0..range.custom_kernels {
                let table =
                    CustomTable::random(custom_seed(range.seed, i), range.n_max, range.a_max);
                let g = SummandKernel::custom(table);
                if suite == Suite::Transplant {
                    // H is derived from the clean table so a fault in G shows up
                    let h = CustomTable::transplanted(&g, range.n_max, range.a_max)?;
                    transplanted.push(SummandKernel::custom(h));
                }
                customs.push(Self::perturb(fault, g));
            }
        }
        Ok(Context {
            fault,
            customs,
            transplanted,
        })
    }

    fn perturb(fault: Option<Fault>, kernel: SummandKernel) -> SummandKernel {
        match fault {
            Some(f) if f.family == kernel.family() => kernel.with_perturbation(f.perturbation),
            _ => kernel,
        }
    }

    pub(crate) fn builtin(&self, kernel: SummandKernel) -> SummandKernel {
        Self::perturb(self.fault, kernel)
    }

    pub(crate) fn resolve(&self, kernel: &KernelRef) -> SummandKernel {
        match *kernel {
            KernelRef::Builtin { family, order, .. } => self.builtin(
                SummandKernel::of_family(family, order).expect("sweeps only build valid kernels"),
            ),
            KernelRef::Custom { index } => self.customs[index].clone(),
        }
    }

    pub(crate) fn transplant_pair(&self, index: usize) -> (&SummandKernel, &SummandKernel) {
        (&self.customs[index], &self.transplanted[index])
    }
}

/// A validated suite run, ready for case evaluation.
pub struct Prepared {
    suite: Suite,
    range: SweepRange,
    notes: Vec<alloc::string::String>,
    cases: Vec<Case>,
    ctx: Context,
}

impl Prepared {
    pub fn suite(&self) -> Suite {
        self.suite
    }

    pub fn cases(&self) -> &[Case] {
        &self.cases
    }

    pub fn check(&self, case: &Case) -> Vec<Violation> {
        suite::check_case(case, &self.ctx)
    }

    /// Assembles the report; `results[i]` must belong to `cases()[i]`.
    pub fn finish(self, results: Vec<Vec<Violation>>) -> Report {
        assert_eq!(results.len(), self.cases.len(), "one result per case");
        Report {
            suite: self.suite,
            range: self.range,
            cases_checked: self.cases.len() as u64,
            violations: results.into_iter().flatten().collect(),
            notes: self.notes,
            elapsed_ms: None,
        }
    }
}

// Prepared is shared across worker threads by the std runner.
const _: () = {
    fn assert_sync<T: Sync + Send>() {}
    let _ = assert_sync::<Prepared>;
};

impl Verifier {
    /// Estimated work for a suite, walking the grid without allocating.
    /// Stops counting once `limit` is exceeded.
    pub fn estimate(suite: Suite, range: &SweepRange, limit: u64) -> u64 {
        let mut total = 0u64;
        let _ = suite::for_each_case(suite, range, &mut |case| {
            total = total.saturating_add(case.cost());
            if total > limit {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        total
    }

    pub fn prepare(&self, suite: Suite, range: &SweepRange) -> Result<Prepared> {
        range.validate_for(suite)?;
        self.prepare_unchecked(suite, *range, Vec::new())
    }

    fn prepare_unchecked(
        &self,
        suite: Suite,
        range: SweepRange,
        notes: Vec<alloc::string::String>,
    ) -> Result<Prepared> {
        if let Some(budget) = self.budget {
            let estimate = Self::estimate(suite, &range, budget);
            if estimate > budget {
                return Err(crate::Error::RangeTooLarge {
                    suite: suite.name(),
                    estimate,
                    budget,
                });
            }
        }
        let mut cases = Vec::new();
        let _ = suite::for_each_case(suite, &range, &mut |case| {
            cases.push(case);
            ControlFlow::Continue(())
        });
        Ok(Prepared {
            suite,
            range,
            notes,
            cases,
            ctx: Context::build(self.fault, suite, &range)?,
        })
    }

    /// Prepares with per-suite clamping instead of rejecting the range.
    pub fn prepare_clamped(&self, suite: Suite, range: &SweepRange) -> Result<Prepared> {
        let (range, notes) = range.clamped_for(suite);
        self.prepare_unchecked(suite, range, notes)
    }

    pub fn run_suite(&self, suite: Suite, range: &SweepRange) -> Result<Report> {
        Ok(run_serial(self.prepare(suite, range)?))
    }

    /// Every suite in [`Suite::ALL`] order. Ranges are clamped per suite and
    /// errors become failed reports.
    pub fn run_all(&self, range: &SweepRange) -> Vec<Report> {
        Suite::ALL
            .into_iter()
            .map(|suite| match self.prepare_clamped(suite, range) {
                Ok(p) => run_serial(p),
                Err(e) => Report::failed(suite, range.clamped_for(suite).0, e.to_string()),
            })
            .collect()
    }
}

fn run_serial(p: Prepared) -> Report {
    let results = p.cases().iter().map(|c| p.check(c)).collect();
    p.finish(results)
}

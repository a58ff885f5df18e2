use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::Suite;
use crate::paths::ENUMERATION_LIMIT;
use crate::{Error, Result};

/// Inclusive sweep bounds. Each suite reads only the fields it needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SweepRange {
    /// Half index for sums over `0..=2n`; composite index for the M-sum
    /// calculus suites.
    pub n_max: u64,
    pub m_max: u64,
    pub r_max: u64,
    pub a_max: u64,
    pub t_max: u64,
    /// Bound for the pure binomial identities.
    pub identity_max: u64,
    /// `n`-window for the `K_r` checks.
    pub kr_window: u64,
    /// Largest `x + y` for explicit path enumeration.
    pub board_max: u64,
    /// Number of seeded random kernels in the fuzz suites.
    pub custom_kernels: u64,
    pub seed: u64,
}

impl SweepRange {
    pub const DEFAULT_SEED: u64 = 0x5EED;
}

impl Default for SweepRange {
    fn default() -> Self {
        SweepRange {
            n_max: 10,
            m_max: 4,
            r_max: 5,
            a_max: 4,
            t_max: 2,
            identity_max: 12,
            kr_window: 500,
            board_max: 12,
            custom_kernels: 50,
            seed: Self::DEFAULT_SEED,
        }
    }
}

/// `(field, min, max)` for every bound the suite reads.
fn limits(suite: Suite) -> Vec<(&'static str, u64, u64)> {
    let mut out = Vec::new();
    if suite.uses_m() {
        out.push(("m_max", 1, u64::MAX));
    }
    if suite.uses_r() {
        out.push(("r_max", 1, u64::MAX));
    }
    if suite == Suite::Paths {
        out.push(("n_max", 1, u64::MAX));
        out.push(("board_max", 0, ENUMERATION_LIMIT));
    }
    out
}

impl SweepRange {
    fn field_mut(&mut self, field: &str) -> &mut u64 {
        match field {
            "m_max" => &mut self.m_max,
            "r_max" => &mut self.r_max,
            "n_max" => &mut self.n_max,
            "board_max" => &mut self.board_max,
            _ => unreachable!("no bound on {field}"),
        }
    }

    /// Fails if any bound the suite reads is outside its admissible interval.
    pub fn validate_for(&self, suite: Suite) -> Result<()> {
        let mut copy = *self;
        for (field, min, max) in limits(suite) {
            let v = *copy.field_mut(field);
            if v < min || v > max {
                return Err(Error::InvalidRange {
                    suite: suite.name(),
                    reason: if max == u64::MAX {
                        format!("{field} = {v}, must be at least {min}")
                    } else {
                        format!("{field} = {v} outside {min}..={max}")
                    },
                });
            }
        }
        Ok(())
    }

    /// Moves out-of-range bounds to the nearest admissible value and
    /// describes each adjustment.
    pub fn clamped_for(&self, suite: Suite) -> (SweepRange, Vec<String>) {
        let mut out = *self;
        let mut notes = Vec::new();
        for (field, min, max) in limits(suite) {
            let slot = out.field_mut(field);
            let clamped = (*slot).clamp(min, max);
            if clamped != *slot {
                notes.push(format!("{field} clamped from {} to {clamped}", *slot));
                *slot = clamped;
            }
        }
        (out, notes)
    }
}

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{Suite, SweepRange};
use crate::ExactInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamValue {
    Int(u64),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Param {
    pub name: &'static str,
    pub value: ParamValue,
}

impl Param {
    pub fn int(name: &'static str, v: u64) -> Self {
        Param {
            name,
            value: ParamValue::Int(v),
        }
    }

    pub fn text(name: &'static str, v: impl Into<String>) -> Self {
        Param {
            name,
            value: ParamValue::Text(v.into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    Mismatch {
        expected: ExactInt,
        actual: ExactInt,
    },
    NotDivisible {
        value: ExactInt,
        divisor: ExactInt,
        remainder: ExactInt,
    },
    /// A claim that `divisor` must not divide `value` failed.
    UnexpectedlyDivisible {
        value: ExactInt,
        divisor: ExactInt,
    },
    Error {
        message: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Which assertion inside the suite failed.
    pub check: &'static str,
    pub params: Vec<Param>,
    pub kind: ViolationKind,
}

/// Outcome of one suite run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub range: SweepRange,
    pub cases_checked: u64,
    pub violations: Vec<Violation>,
    /// Range clamping and similar remarks.
    pub notes: Vec<String>,
    /// Wall-clock time, filled in by timing runners only.
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn failed(suite: Suite, range: SweepRange, message: String) -> Self {
        Report {
            suite,
            range,
            cases_checked: 0,
            violations: vec![Violation {
                check: "run",
                params: Vec::new(),
                kind: ViolationKind::Error { message },
            }],
            notes: Vec::new(),
            elapsed_ms: None,
        }
    }
}

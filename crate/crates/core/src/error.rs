use alloc::string::String;

use crate::ExactInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivideByZero,
    #[error("{dividend} is not divisible by {divisor} (remainder {remainder})")]
    NonDivisible {
        dividend: ExactInt,
        divisor: ExactInt,
        remainder: ExactInt,
    },
    #[error("expected a positive argument, got {0}")]
    NonPositive(ExactInt),
    #[error("custom kernel has no value at (n={n}, k={k}, a={a})")]
    TableMiss { n: u64, k: u64, a: u64 },
    #[error("kernel evaluated outside 0 <= k <= n (n={n}, k={k})")]
    KernelDomain { n: u64, k: u64 },
    #[error("board ({x}, {y}) exceeds the enumeration bound x + y <= {limit}")]
    BoardTooLarge { x: u64, y: u64, limit: u64 },
    #[error("argument out of domain: {0}")]
    Domain(&'static str),
    #[error("invalid decimal integer {0:?}")]
    Parse(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("invalid range for suite {suite}: {reason}")]
    InvalidRange { suite: &'static str, reason: String },
    #[error("suite {suite} needs an estimated {estimate} work units, budget is {budget}")]
    RangeTooLarge {
        suite: &'static str,
        estimate: u64,
        budget: u64,
    },
}

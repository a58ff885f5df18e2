use crate::{choose, exact_div, ExactInt, Result};

/// Catalan number `binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> ExactInt {
    exact_div(&choose(2 * n, n), &ExactInt::from(n + 1)).expect("n + 1 divides binom(2n, n)")
}

/// Super Catalan number `binom(2n, n) binom(2r, r) / binom(n + r, n)`.
pub fn super_catalan(n: u64, r: u64) -> Result<ExactInt> {
    exact_div(&(choose(2 * n, n) * choose(2 * r, r)), &choose(n + r, n))
}

/// `S(n, r) / 2`. Only defined for `r >= 1`, where `S(n, r)` is even.
pub fn half_super_catalan(n: u64, r: u64) -> Result<ExactInt> {
    exact_div(&super_catalan(n, r)?, &ExactInt::from(2))
}

/// Gessel number `r binom(2n, n) binom(2r, r) / (2 (n + r))` for `r >= 1`.
///
/// Evaluated from the defining fraction, not from the product
/// `binom(n + r - 1, n) S(n, r) / 2`, so the two can be checked against
/// each other.
pub fn gessel(n: u64, r: u64) -> Result<ExactInt> {
    let num = ExactInt::from(r) * choose(2 * n, n) * choose(2 * r, r);
    exact_div(&num, &ExactInt::from(2 * (n + r)))
}

/// `(r / 2) binom(2r, r)`, the smallest multiplier making
/// `K binom(2n, n) / (n + r)` integral for every `n`.
pub fn kr_constant(r: u64) -> Result<ExactInt> {
    exact_div(&(ExactInt::from(r) * choose(2 * r, r)), &ExactInt::from(2))
}

//! Brute-force reference values computed straight from the defining
//! fractions with factorials and rationals. Shares no code path with the
//! crate's cached binomials or exact-division pipeline.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    factorial(n as u64) / (factorial(k as u64) * factorial((n - k) as u64))
}

fn integral(q: BigRational) -> BigInt {
    assert!(q.is_integer(), "{q} is not an integer");
    q.to_integer()
}

pub fn catalan(n: i64) -> BigInt {
    integral(BigRational::new(binom(2 * n, n), BigInt::from(n + 1)))
}

pub fn super_catalan(n: i64, r: i64) -> BigInt {
    integral(BigRational::new(
        binom(2 * n, n) * binom(2 * r, r),
        binom(n + r, n),
    ))
}

pub fn gessel(n: i64, r: i64) -> BigInt {
    integral(
        BigRational::new(BigInt::from(r), BigInt::from(2 * (n + r)))
            * BigRational::from_integer(binom(2 * n, n) * binom(2 * r, r)),
    )
}

fn sign(k: i64) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Alternating convolution `sum_k (-1)^k binom(2n,k)^m A(k) A(2n-k)`.
pub fn convolution(n: i64, m: u32, a: impl Fn(i64) -> BigInt) -> BigInt {
    (0..=2 * n)
        .map(|k| sign(k) * num_traits::pow(binom(2 * n, k), m as usize) * a(k) * a(2 * n - k))
        .sum()
}

pub fn phi(n: i64, m: u32, r: i64) -> BigInt {
    convolution(n, m, |k| gessel(k, r))
}

pub fn psi(n: i64, m: u32, r: i64) -> BigInt {
    convolution(n, m, |k| super_catalan(k, r))
}

pub fn divides(d: &BigInt, v: &BigInt) -> bool {
    (v % d).is_zero()
}

pub fn abs(v: &BigInt) -> BigInt {
    v.abs()
}

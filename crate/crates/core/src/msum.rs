//! Generic weighted sums `sum_k binom(n,k)^m F(n,k,a)` and their M-sum
//! refinements.
//!
//! M-sum entry points take the composite index directly: to evaluate a
//! sum over `0..=2n`, pass `2n`. Only the named convolutions
//! ([`gessel_convolution`], [`super_catalan_convolution`], [`quarter_psi`])
//! take the half index and double it themselves.

use num_traits::{Pow, Zero};

use crate::{choose, exact_div, Error, ExactInt, Result, SummandKernel};

fn binom_pow(n: u64, k: u64, t: u64) -> ExactInt {
    if t == 0 {
        return ExactInt::from(1);
    }
    choose(n, k).pow(t as u32)
}

/// `sum_{k=0}^{n} binom(n,k)^m F(n,k,a)`.
pub fn direct_sum(kernel: &SummandKernel, n: u64, m: u64, a: u64) -> Result<ExactInt> {
    let mut acc = ExactInt::zero();
    for k in 0..=n {
        acc += binom_pow(n, k, m) * kernel.eval(n, k, a)?;
    }
    Ok(acc)
}

/// One M-sum value `M_S(n, j, t; a)` for the sum built on `kernel`.
#[derive(Debug, Clone, Copy)]
pub struct MSumQuery<'a> {
    pub kernel: &'a SummandKernel,
    pub n: u64,
    pub j: u64,
    pub t: u64,
    pub a: u64,
}

impl MSumQuery<'_> {
    pub fn eval(&self) -> Result<ExactInt> {
        m_sum(self)
    }
}

/// `binom(n-j, j) sum_{k=j}^{n-j} binom(n-2j, k-j) binom(n,k)^t F(n,k,a)`.
///
/// Zero whenever `2j > n`.
pub fn m_sum(q: &MSumQuery<'_>) -> Result<ExactInt> {
    let MSumQuery { kernel, n, j, t, a } = *q;
    if 2 * j > n {
        return Ok(ExactInt::zero());
    }
    let width = n - 2 * j;
    let mut acc = ExactInt::zero();
    for k in j..=n - j {
        acc += choose(width, k - j) * binom_pow(n, k, t) * kernel.eval(n, k, a)?;
    }
    Ok(choose(n - j, j) * acc)
}

/// `M_S(n, j, t+1; a)` computed from level `t` through
/// `binom(n,j) sum_u binom(n-j, u) M_S(n, j+u, t; a)`.
pub fn m_sum_lift(kernel: &SummandKernel, n: u64, j: u64, t: u64, a: u64) -> Result<ExactInt> {
    if 2 * j > n {
        return Ok(ExactInt::zero());
    }
    let mut acc = ExactInt::zero();
    for u in 0..=(n - 2 * j) / 2 {
        let inner = m_sum(&MSumQuery {
            kernel,
            n,
            j: j + u,
            t,
            a,
        })?;
        acc += choose(n - j, u) * inner;
    }
    Ok(choose(n, j) * acc)
}

/// Moves the factor `binom(a+k, a) binom(a+n-k, a)` out of the kernel:
///
/// `binom(a+j, a) sum_{l=0}^{a} binom(n-j+l, l) binom(n-j, a-l) M_G(n, j+a-l, 0; a)`
///
/// equals `M_H(n, j, 0; a)` for `H(n,k,a) = binom(a+k,a) binom(a+n-k,a) G(n,k,a)`.
pub fn transplant(g: &SummandKernel, n: u64, j: u64, a: u64) -> Result<ExactInt> {
    if 2 * j > n {
        return Ok(ExactInt::zero());
    }
    let mut acc = ExactInt::zero();
    for l in 0..=a {
        let inner = m_sum(&MSumQuery {
            kernel: g,
            n,
            j: j + a - l,
            t: 0,
            a,
        })?;
        acc += choose(n - j + l, l) * choose(n - j, a - l) * inner;
    }
    Ok(choose(a + j, a) * acc)
}

fn require_order(r: u64) -> Result<()> {
    if r == 0 {
        return Err(Error::Domain("convolution order r must be at least 1"));
    }
    Ok(())
}

/// Alternating convolution of Gessel numbers over `0..=2n`:
/// `sum_k (-1)^k binom(2n,k)^m P(k,r) P(2n-k,r)`.
pub fn gessel_convolution(n: u64, m: u64, r: u64) -> Result<ExactInt> {
    require_order(r)?;
    direct_sum(&SummandKernel::gessel(r), 2 * n, m, r - 1)
}

/// Alternating convolution of super Catalan numbers over `0..=2n`.
pub fn super_catalan_convolution(n: u64, m: u64, r: u64) -> Result<ExactInt> {
    require_order(r)?;
    direct_sum(&SummandKernel::super_catalan(r), 2 * n, m, r - 1)
}

/// The super Catalan convolution with both factors halved, summed directly.
pub fn quarter_psi(n: u64, m: u64, r: u64) -> Result<ExactInt> {
    require_order(r)?;
    direct_sum(&SummandKernel::half_super_catalan(r), 2 * n, m, r - 1)
}

/// [`super_catalan_convolution`] divided by four; must agree with [`quarter_psi`].
pub fn quarter_psi_via_psi(n: u64, m: u64, r: u64) -> Result<ExactInt> {
    exact_div(&super_catalan_convolution(n, m, r)?, &ExactInt::from(4))
}

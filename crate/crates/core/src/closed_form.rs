use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{
    choose, exact_div, half_super_catalan, m_sum, super_catalan, Error, ExactInt, MSumQuery,
    Result, SummandKernel,
};

/// Closed-form evaluations of M-sums over the composite index `2n`.
///
/// Each variant documents the sum it closes; [`ClosedForm::m_sum`]
/// evaluates that sum directly so the two can be compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// Plain kernel, `t = 0`: zero for `j < n`, `(-1)^n` at `j = n`.
    S1T0 { n: u64, j: u64 },
    /// Plain kernel, `t = 1`: `(-1)^n binom(2n,n) binom(n,j)`.
    S1T1 { n: u64, j: u64 },
    /// Rising kernel, `t = 0`: `(-1)^n binom(a+n,a) binom(a+j,j) binom(a,n-j)`.
    S2T0 { n: u64, j: u64, a: u64 },
    /// Rising kernel, `t = 1`:
    /// `(-1)^n binom(2n,n) sum_u binom(n,j+u) binom(j+u,u) binom(a+j+u,j+u) binom(a+n,2n-j-u)`.
    S2T1 { n: u64, j: u64, a: u64 },
    /// Central kernel, `t = 0`: `(-1)^j binom(2n,n) binom(2j,j) binom(2(n-j),n-j)`.
    S3T0 { n: u64, j: u64 },
    /// Super Catalan kernel of order `r`, `t = 0`, as a ratio of binomial products.
    PsiT0 { n: u64, j: u64, r: u64 },
    /// Super Catalan kernel of order `r`, `t = 1`.
    PsiT1 { n: u64, j: u64, r: u64 },
    /// Gessel kernel of order `r`, `t = 0`, any `j <= n`.
    PhiJT0 { n: u64, j: u64, r: u64 },
    /// Gessel kernel of order `r` at `j = 0, t = 0`, grouped so every
    /// summand is an integer multiple of `S(n, n+l+1)/2`.
    Phi00 { n: u64, r: u64 },
}

fn signed(negative: bool, v: ExactInt) -> ExactInt {
    if negative {
        -v
    } else {
        v
    }
}

fn odd(e: u64) -> bool {
    e % 2 == 1
}

impl ClosedForm {
    pub const NAMES: [&'static str; 9] = [
        "S1_T0", "S1_T1", "S2_T0", "S2_T1", "S3_T0", "PSI_T0", "PSI_T1", "PHI_J_T0", "PHI_00",
    ];

    pub fn name(&self) -> &'static str {
        let i = match self {
            ClosedForm::S1T0 { .. } => 0,
            ClosedForm::S1T1 { .. } => 1,
            ClosedForm::S2T0 { .. } => 2,
            ClosedForm::S2T1 { .. } => 3,
            ClosedForm::S3T0 { .. } => 4,
            ClosedForm::PsiT0 { .. } => 5,
            ClosedForm::PsiT1 { .. } => 6,
            ClosedForm::PhiJT0 { .. } => 7,
            ClosedForm::Phi00 { .. } => 8,
        };
        Self::NAMES[i]
    }

    /// Builds a family by name (case and `-`/`_` insensitive). `extra` is
    /// `a` for the rising forms and `r` for the super Catalan and Gessel forms.
    pub fn from_name(name: &str, n: u64, j: u64, extra: u64) -> Option<Self> {
        let mut key = alloc::string::String::from(name);
        key.make_ascii_uppercase();
        let key = key.replace('-', "_");
        Some(match key.as_str() {
            "S1_T0" => ClosedForm::S1T0 { n, j },
            "S1_T1" => ClosedForm::S1T1 { n, j },
            "S2_T0" => ClosedForm::S2T0 { n, j, a: extra },
            "S2_T1" => ClosedForm::S2T1 { n, j, a: extra },
            "S3_T0" => ClosedForm::S3T0 { n, j },
            "PSI_T0" => ClosedForm::PsiT0 { n, j, r: extra },
            "PSI_T1" => ClosedForm::PsiT1 { n, j, r: extra },
            "PHI_J_T0" => ClosedForm::PhiJT0 { n, j, r: extra },
            "PHI_00" => ClosedForm::Phi00 { n, r: extra },
            _ => return None,
        })
    }

    /// `(n, j, a-or-r)` with `j = 0` for [`ClosedForm::Phi00`].
    pub fn params(&self) -> (u64, u64, Option<u64>) {
        match *self {
            ClosedForm::S1T0 { n, j } | ClosedForm::S1T1 { n, j } | ClosedForm::S3T0 { n, j } => {
                (n, j, None)
            }
            ClosedForm::S2T0 { n, j, a } | ClosedForm::S2T1 { n, j, a } => (n, j, Some(a)),
            ClosedForm::PsiT0 { n, j, r }
            | ClosedForm::PsiT1 { n, j, r }
            | ClosedForm::PhiJT0 { n, j, r } => (n, j, Some(r)),
            ClosedForm::Phi00 { n, r } => (n, 0, Some(r)),
        }
    }

    fn check_order(&self) -> Result<()> {
        match *self {
            ClosedForm::PsiT0 { r: 0, .. }
            | ClosedForm::PsiT1 { r: 0, .. }
            | ClosedForm::PhiJT0 { r: 0, .. }
            | ClosedForm::Phi00 { r: 0, .. } => Err(Error::Domain("closed form needs r >= 1")),
            _ => Ok(()),
        }
    }

    /// The kernel, level `t` and `a` of the M-sum this form closes.
    pub fn target(&self) -> (SummandKernel, u64, u64) {
        match *self {
            ClosedForm::S1T0 { .. } => (SummandKernel::plain(), 0, 0),
            ClosedForm::S1T1 { .. } => (SummandKernel::plain(), 1, 0),
            ClosedForm::S2T0 { a, .. } => (SummandKernel::rising(), 0, a),
            ClosedForm::S2T1 { a, .. } => (SummandKernel::rising(), 1, a),
            ClosedForm::S3T0 { .. } => (SummandKernel::central(), 0, 0),
            ClosedForm::PsiT0 { r, .. } => (SummandKernel::super_catalan(r), 0, r - 1),
            ClosedForm::PsiT1 { r, .. } => (SummandKernel::super_catalan(r), 1, r - 1),
            ClosedForm::PhiJT0 { r, .. } | ClosedForm::Phi00 { r, .. } => {
                (SummandKernel::gessel(r), 0, r - 1)
            }
        }
    }

    /// Direct evaluation of the M-sum `M(2n, j, t; a)` this form closes.
    pub fn m_sum(&self) -> Result<ExactInt> {
        self.check_order()?;
        let (n, j, _) = self.params();
        let (kernel, t, a) = self.target();
        m_sum(&MSumQuery {
            kernel: &kernel,
            n: 2 * n,
            j,
            t,
            a,
        })
    }

    /// Evaluates the closed form. Requires `j <= n` and `r >= 1` where
    /// applicable; a nonzero remainder in any exact division is an error.
    pub fn eval(&self) -> Result<ExactInt> {
        self.check_order()?;
        let (n, j, _) = self.params();
        if j > n {
            return Ok(ExactInt::zero());
        }
        match *self {
            ClosedForm::S1T0 { n, j } => Ok(if j < n {
                ExactInt::zero()
            } else {
                signed(odd(n), ExactInt::one())
            }),
            ClosedForm::S1T1 { n, j } => Ok(signed(odd(n), choose(2 * n, n) * choose(n, j))),
            ClosedForm::S2T0 { n, j, a } => Ok(signed(
                odd(n),
                choose(a + n, a) * choose(a + j, j) * choose(a, n - j),
            )),
            ClosedForm::S2T1 { n, j, a } => {
                let mut acc = ExactInt::zero();
                for u in 0..=n - j {
                    let w = j + u;
                    acc +=
                        choose(n, w) * choose(w, u) * choose(a + w, w) * choose(a + n, 2 * n - w);
                }
                Ok(signed(odd(n), choose(2 * n, n) * acc))
            }
            ClosedForm::S3T0 { n, j } => Ok(signed(
                odd(j),
                choose(2 * n, n) * choose(2 * j, j) * choose(2 * (n - j), n - j),
            )),
            ClosedForm::PsiT0 { n, j, r } => {
                let num = choose(2 * r, r)
                    * choose(2 * n, n)
                    * choose(2 * j, j)
                    * choose(2 * (n + r - j), n + r - j)
                    * choose(2 * n - j, n);
                let den = choose(n + r, n) * choose(2 * n + r - j, n);
                Ok(signed(odd(j), exact_div(&num, &den)?))
            }
            ClosedForm::PsiT1 { n, j, r } => {
                let mut acc = ExactInt::zero();
                for v in 0..=n - j {
                    let term = super_catalan(n + r - j - v, n)?
                        * choose(2 * (j + v), j + v)
                        * choose(n - j, v);
                    acc += signed(odd(v), term);
                }
                Ok(signed(odd(j), super_catalan(n, r)? * choose(n, j) * acc))
            }
            ClosedForm::PhiJT0 { n, j, r } => phi_j_t0(n, j, r),
            ClosedForm::Phi00 { n, r } => {
                let mut acc = ExactInt::zero();
                for l in 0..r {
                    let term = choose(2 * n + l, l)
                        * choose(2 * (r - 1 - l), r - 1 - l)
                        * choose(n, r - 1 - l)
                        * half_super_catalan(n, n + l + 1)?;
                    acc += signed(odd(l), term);
                }
                Ok(signed(odd(r - 1), half_super_catalan(n, r)? * acc))
            }
        }
    }
}

// The inner summands are ratios whose individual integrality is not
// evident, so they are accumulated as exact rationals and the total must
// come out with denominator 1.
fn phi_j_t0(n: u64, j: u64, r: u64) -> Result<ExactInt> {
    let mut acc = BigRational::zero();
    for l in 0..r {
        let i = j + r - 1 - l;
        let num = choose(2 * n - j + l, l)
            * choose(2 * i, i)
            * choose(2 * (n - j + l + 1), n - j + l + 1)
            * choose(n - j, r - 1 - l);
        let den = ExactInt::from(2) * choose(2 * n - j + l + 1, n);
        let term = BigRational::new(num, den);
        acc = if odd(l) { acc - term } else { acc + term };
    }
    let prefactor = choose(j + r - 1, j) * half_super_catalan(n, r)? * choose(2 * n - j, n);
    let total = acc * BigRational::from_integer(prefactor);
    let value = exact_div(total.numer(), total.denom())?;
    Ok(signed(odd(j + r - 1), value))
}

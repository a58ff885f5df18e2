//! Exact arithmetic for Gessel numbers, super Catalan numbers and their
//! alternating binomial convolutions.
//!
//! Everything here is integer-exact. Quantities that are defined as
//! fractions are evaluated numerator-first and finished with a single
//! [`exact_div`], so a nonzero remainder surfaces as an error instead of
//! being rounded away.
//!
//! The crate is `no_std` and only needs `alloc`. IO, report formats and the
//! command-line frontend live in the companion `convolvium` crate.
#![no_std]

extern crate alloc;

mod binomial;
mod closed_form;
mod error;
mod exact;
mod kernel;
mod msum;
pub mod paths;
mod sequences;
pub mod verify;

pub use binomial::{binomial, choose, BinomialCache};
pub use closed_form::ClosedForm;
pub use error::Error;
pub use exact::{exact_div, lcm, parse_exact, ExactInt};
pub use kernel::{CustomTable, KernelFamily, Perturbation, SummandKernel};
pub use msum::{
    direct_sum, gessel_convolution, m_sum, m_sum_lift, quarter_psi, quarter_psi_via_psi,
    super_catalan_convolution, transplant, MSumQuery,
};
pub use sequences::{catalan, gessel, half_super_catalan, kr_constant, super_catalan};

pub type Result<T, E = Error> = core::result::Result<T, E>;

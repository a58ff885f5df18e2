//! Lattice-path ground truth for Gessel numbers.
//!
//! Paths start at the origin and take unit right (`R`) and up (`U`) steps.
//! A path touches a point when it passes through it, endpoints included.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::{gessel, Error, ExactInt, Result};

/// Largest `x + y` accepted by [`enumerate_paths`].
pub const ENUMERATION_LIMIT: u64 = 22;

/// Diagonal points a counted path must avoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TouchSet {
    /// No restriction.
    Empty,
    /// `{(x, x) : x >= r}`.
    GesselTail { r: u64 },
    /// `{(x, x) : 1 <= x <= n}`.
    PrefixBand { n: u64 },
}

impl TouchSet {
    pub fn contains(&self, x: u64, y: u64) -> bool {
        if x != y {
            return false;
        }
        match *self {
            TouchSet::Empty => false,
            TouchSet::GesselTail { r } => x >= r,
            TouchSet::PrefixBand { n } => 1 <= x && x <= n,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathSpec {
    pub target: (u64, u64),
    pub forbidden: TouchSet,
}

impl PathSpec {
    pub fn new(x: u64, y: u64, forbidden: TouchSet) -> Self {
        PathSpec {
            target: (x, y),
            forbidden,
        }
    }

    /// Paths to `(n+r, n+r-1)` avoiding `(x, x)` for `x >= r`.
    pub fn gessel_tail(n: u64, r: u64) -> Self {
        Self::new(n + r, n + r - 1, TouchSet::GesselTail { r })
    }

    /// Paths to `(n+r, n+r-1)` avoiding `(x, x)` for `1 <= x <= n`.
    pub fn prefix_band(n: u64, r: u64) -> Self {
        Self::new(n + r, n + r - 1, TouchSet::PrefixBand { n })
    }
}

/// Counts admissible paths by dynamic programming over the grid.
pub fn count_paths(spec: &PathSpec) -> ExactInt {
    let (tx, ty) = spec.target;
    // column[y] holds the count for (x, y) of the current x
    let mut column: Vec<ExactInt> = vec![ExactInt::zero(); ty as usize + 1];
    for x in 0..=tx {
        for y in 0..=ty {
            let idx = y as usize;
            if spec.forbidden.contains(x, y) {
                column[idx] = ExactInt::zero();
            } else if x == 0 && y == 0 {
                column[idx] = ExactInt::one();
            } else if y > 0 {
                let below = column[idx - 1].clone();
                column[idx] += below;
            }
        }
    }
    core::mem::take(&mut column[ty as usize])
}

/// Lists every admissible path as an `R`/`U` string, in lexicographic order.
pub fn enumerate_paths(spec: &PathSpec) -> Result<Vec<String>> {
    let (tx, ty) = spec.target;
    if tx + ty > ENUMERATION_LIMIT {
        return Err(Error::BoardTooLarge {
            x: tx,
            y: ty,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut out = Vec::new();
    if !spec.forbidden.contains(0, 0) {
        let mut buf = String::with_capacity((tx + ty) as usize);
        walk(spec, 0, 0, &mut buf, &mut out);
    }
    Ok(out)
}

fn walk(spec: &PathSpec, x: u64, y: u64, buf: &mut String, out: &mut Vec<String>) {
    let (tx, ty) = spec.target;
    if (x, y) == (tx, ty) {
        out.push(buf.clone());
        return;
    }
    for (dx, dy, step) in [(1, 0, 'R'), (0, 1, 'U')] {
        let (nx, ny) = (x + dx, y + dy);
        if nx > tx || ny > ty || spec.forbidden.contains(nx, ny) {
            continue;
        }
        buf.push(step);
        walk(spec, nx, ny, buf, out);
        buf.pop();
    }
}

/// The two path counts and the formula value for one `(n, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpretationCheck {
    pub n: u64,
    pub r: u64,
    pub tail_count: ExactInt,
    pub band_count: ExactInt,
    pub formula: ExactInt,
}

impl InterpretationCheck {
    pub fn holds(&self) -> bool {
        self.tail_count == self.formula && self.band_count == self.formula
    }
}

/// Counts both path models for `P(n, r)` and evaluates the formula.
/// Requires `n >= 1` and `r >= 1`.
pub fn verify_interpretations(n: u64, r: u64) -> Result<InterpretationCheck> {
    if n == 0 || r == 0 {
        return Err(Error::Domain("path interpretations need n >= 1 and r >= 1"));
    }
    Ok(InterpretationCheck {
        n,
        r,
        tail_count: count_paths(&PathSpec::gessel_tail(n, r)),
        band_count: count_paths(&PathSpec::prefix_band(n, r)),
        formula: gessel(n, r)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{catalan, choose};

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn count_examples() {
        assert_eq!(
            count_paths(&PathSpec::new(1, 0, TouchSet::GesselTail { r: 1 })),
            int(1)
        );
        assert_eq!(
            count_paths(&PathSpec::new(3, 2, TouchSet::GesselTail { r: 2 })),
            int(4)
        );
        for n in 0..=8 {
            assert_eq!(count_paths(&PathSpec::gessel_tail(n, 1)), catalan(n));
        }
    }

    #[test]
    fn enumerate_examples() {
        let one = enumerate_paths(&PathSpec::new(1, 0, TouchSet::GesselTail { r: 1 })).unwrap();
        assert_eq!(one, ["R"]);
        let four = enumerate_paths(&PathSpec::new(3, 2, TouchSet::GesselTail { r: 2 })).unwrap();
        assert_eq!(four, ["RRRUU", "RRURU", "RURRU", "URRRU"]);
        let empty = enumerate_paths(&PathSpec::new(0, 0, TouchSet::PrefixBand { n: 3 })).unwrap();
        assert_eq!(empty, [""]);
        assert!(matches!(
            enumerate_paths(&PathSpec::new(12, 11, TouchSet::Empty)),
            Err(Error::BoardTooLarge { .. })
        ));
    }

    #[test]
    fn forbidden_origin_has_no_paths() {
        let spec = PathSpec::new(2, 1, TouchSet::GesselTail { r: 0 });
        assert_eq!(count_paths(&spec), int(0));
        assert!(enumerate_paths(&spec).unwrap().is_empty());
    }

    #[test]
    fn empty_touch_set_is_binomial() {
        for p in 0..=12 {
            for q in 0..=12 {
                assert_eq!(
                    count_paths(&PathSpec::new(p, q, TouchSet::Empty)),
                    choose(p + q, p)
                );
            }
        }
    }

    #[test]
    fn interpretation_examples() {
        let c = verify_interpretations(1, 2).unwrap();
        assert!(c.holds());
        assert_eq!(c.formula, int(4));
        for n in 1..=8 {
            let c = verify_interpretations(n, 1).unwrap();
            assert!(c.holds());
            assert_eq!(c.tail_count, catalan(n));
        }
        assert!(verify_interpretations(3, 2).unwrap().holds());
        assert!(verify_interpretations(0, 2).is_err());
    }
}

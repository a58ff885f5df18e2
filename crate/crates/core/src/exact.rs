use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision signed integer used for every value in the crate.
pub type ExactInt = BigInt;

/// Divides `a` by `b`, failing loudly unless the division is exact.
pub fn exact_div(a: &ExactInt, b: &ExactInt) -> Result<ExactInt> {
    if b.is_zero() {
        return Err(Error::DivideByZero);
    }
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonDivisible {
            dividend: a.clone(),
            divisor: b.clone(),
            remainder: r,
        })
    }
}

/// Least common multiple of two positive integers.
pub fn lcm(a: &ExactInt, b: &ExactInt) -> Result<ExactInt> {
    for v in [a, b] {
        if !v.is_positive() {
            return Err(Error::NonPositive(v.clone()));
        }
    }
    Ok(a.lcm(b))
}

/// Parses a decimal integer with an optional leading sign.
pub fn parse_exact(s: &str) -> Result<ExactInt> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| Error::Parse(s.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use num_traits::{One, Pow};

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(exact_div(&int(20), &int(4)).unwrap(), int(5));
        assert_eq!(exact_div(&int(-12), &int(3)).unwrap(), int(-4));
        match exact_div(&int(7), &int(2)) {
            Err(Error::NonDivisible { remainder, .. }) => assert_eq!(remainder, int(1)),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(exact_div(&int(7), &int(0)), Err(Error::DivideByZero));
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm(&int(4), &int(6)).unwrap(), int(12));
        assert_eq!(lcm(&int(5), &int(1)).unwrap(), int(5));
        assert_eq!(lcm(&int(20), &int(12)).unwrap(), int(60));
        assert!(matches!(lcm(&int(0), &int(3)), Err(Error::NonPositive(_))));
        assert!(matches!(lcm(&int(3), &int(-3)), Err(Error::NonPositive(_))));
    }

    #[test]
    fn decimal_round_trip_ten_thousand_digits() {
        let big: ExactInt = -(int(7).pow(11_835u32) + ExactInt::one());
        let text = big.to_string();
        assert!(text.len() > 10_000);
        assert_eq!(parse_exact(&text).unwrap(), big);
        assert!(parse_exact("12x").is_err());
    }
}

//! The exact scalar type: arbitrary-precision rationals in lowest terms.
//!
//! Backed by [`num::BigRational`], which keeps the denominator positive and
//! the fraction reduced on construction, so equality is structural. The
//! text form is `p/q` in lowest terms, or just `p` when the denominator is
//! one, with the sign on the numerator (`-3/7`).

use num::bigint::BigInt;
use num::traits::{One, Zero};
use thiserror::Error;

pub type Rational = num::BigRational;

/// `p/q` as an exact rational. Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid rational literal {0:?} (expected `p` or `p/q` with q != 0)")]
pub struct ParseRationalError(pub String);

/// Parse `p` or `p/q` into a rational in lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let bad = || ParseRationalError(s.to_string());
    let mut parts = s.splitn(2, '/');
    let num: BigInt = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    match parts.next() {
        None => Ok(Rational::from_integer(num)),
        Some(d) => {
            let den: BigInt = d.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Render in the canonical text form: `p/q`, or `p` when `q == 1`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_is_canonical() {
        assert_eq!(rat(4, 2), rat_int(2));
        assert_eq!(rat(1, -2), rat(-1, 2));
        assert_eq!(rat(0, 5), rat_int(0));
        let r = rat(-6, -8);
        assert_eq!(format_rational(&r), "3/4");
    }

    #[test]
    fn format_follows_convention() {
        assert_eq!(format_rational(&rat(1, 2)), "1/2");
        assert_eq!(format_rational(&rat(-3, 7)), "-3/7");
        assert_eq!(format_rational(&rat_int(5)), "5");
        assert_eq!(format_rational(&rat_int(0)), "0");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["0", "1", "-1", "1/2", "-3/7", "22/7", "691/2730"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        // non-canonical input is reduced
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rational("5/-10").unwrap(), rat(-1, 2));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "/", "1/0", "a/b", "1/2/3x", "1.5"] {
            assert!(parse_rational(s).is_err(), "accepted {s:?}");
        }
    }
}

//! Exact scalar arithmetic.
//!
//! All coordinates, coefficients and bounds in this crate are
//! arbitrary-precision rationals.  `num_rational::BigRational` already
//! maintains the invariants we need (lowest terms, positive denominator),
//! so it is used directly as the scalar field; this module adds the string
//! forms used by every external interface: `"p/q"` (or a bare integer when
//! q = 1) with exact round-trip, plus a fixed 12-digit decimal rendering
//! for human-facing tables.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

pub type Rational = num_rational::BigRational;

/// Rational from an integer pair; panics on q = 0 (programmer error).
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Rational from an integer.
pub fn rat_int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// 2^e as a rational, for any sign of `e`.
pub fn pow2(e: i32) -> Rational {
    let one = BigInt::one();
    if e >= 0 {
        Rational::from_integer(one << e as usize)
    } else {
        Rational::new(one.clone(), one << (-e) as usize)
    }
}

/// Parses `"p/q"` or a bare integer literal.  Whitespace is not accepted:
/// scenario files are machine-written and exactness demands strict forms.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::BadRational {
        literal: s.to_string(),
    };
    match s.split_once('/') {
        None => {
            let p = BigInt::from_str(s).map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
        Some((ps, qs)) => {
            let p = BigInt::from_str(ps).map_err(|_| bad())?;
            let q = BigInt::from_str(qs).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Canonical string form: `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Decimal rendering with exactly 12 fractional digits, rounded half away
/// from zero.  Used next to the exact form in CSV tables.
pub fn decimal12(r: &Rational) -> String {
    let scale = BigInt::from(10u32).pow(12);
    let scaled = r * Rational::from_integer(scale.clone());
    // round half away from zero
    let two = BigInt::from(2);
    let num = scaled.numer() * &two + scaled.denom() * BigInt::from(scaled.numer().signum());
    let rounded = num / (scaled.denom() * &two);
    let neg = rounded.is_negative();
    let abs = rounded.abs();
    let int_part = &abs / &scale;
    let frac_part = &abs % &scale;
    let sign = if neg { "-" } else { "" };
    format!("{sign}{int_part}.{frac_part:012}")
}

/// Both renderings glued together for CSV cells: `p/q=d.dddddddddddd`.
pub fn csv_cell(r: &Rational) -> String {
    format!("{}={}", format_rational(r), decimal12(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for s in ["3/4", "-3/4", "0", "17", "-2", "1/3"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(format_rational(&parse_rational("6/8").unwrap()), "3/4");
        assert_eq!(format_rational(&parse_rational("3/-4").unwrap()), "-3/4");
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert_eq!(format_rational(&parse_rational("0/5").unwrap()), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "1.5", "a/b", "1 / 2", "+ 1"] {
            assert!(parse_rational(s).is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal12(&rat(3, 4)), "0.750000000000");
        assert_eq!(decimal12(&rat(2, 3)), "0.666666666667");
        assert_eq!(decimal12(&rat(-1, 3)), "-0.333333333333");
        assert_eq!(decimal12(&rat_int(0)), "0.000000000000");
        assert_eq!(decimal12(&rat_int(2)), "2.000000000000");
        // carry across the decimal point
        assert_eq!(
            decimal12(&parse_rational("1999999999999/1000000000000").unwrap()),
            "1.999999999999"
        );
        assert_eq!(
            decimal12(&parse_rational("19999999999999/10000000000000").unwrap()),
            "2.000000000000"
        );
    }

    #[test]
    fn pow2_signs() {
        assert_eq!(pow2(0), rat_int(1));
        assert_eq!(pow2(3), rat_int(8));
        assert_eq!(pow2(-2), rat(1, 4));
    }
}

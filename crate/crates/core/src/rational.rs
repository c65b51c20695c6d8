//! The scalar type of the crate: exact arbitrary-precision fractions.
//!
//! `Rational` is `num_rational::BigRational`, which keeps every value in
//! canonical form: always fully reduced, denominator >= 1, and zero stored
//! as 0/1. All certification paths work over this type; there is no
//! floating point anywhere in the crate.

use num_bigint::BigInt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Build `numer/denom` from machine integers, reduced to lowest terms.
///
/// Panics if `denom` is zero.
pub fn rat(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "rational denominator must be nonzero");
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Build the integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse the canonical text form: `"p"` or `"p/q"`.
///
/// Inputs are normalized on the way in (`"2/4"` becomes `1/2`, a negative
/// denominator moves the sign to the numerator); a zero denominator is
/// rejected. Printing a `Rational` with `Display` yields the canonical
/// form back.
pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s).map_err(|_| Error::ParseRational(s.to_owned()))
}

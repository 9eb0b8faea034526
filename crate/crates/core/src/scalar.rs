//! Exact rational scalars.
//!
//! Every quantity in this crate is a `Scalar`: an arbitrary-precision
//! rational kept in canonical form (positive denominator, reduced). No
//! floating point is used anywhere; rank and kernel computations depend
//! on exact zero tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type Scalar = BigRational;

/// Integer scalar.
pub fn rat(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Fraction `n/d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_zero(s: &Scalar) -> bool {
    s.is_zero()
}

/// Parses the literal grammar `-?[0-9]+(/[1-9][0-9]*)?`.
///
/// This is stricter than `BigRational::from_str`: the denominator must be
/// present without a sign, must not be zero and must not carry leading
/// zeros. The result is canonicalized by `BigRational::new`.
pub fn parse_scalar_literal(text: &str) -> Result<Scalar> {
    let err = || Error::InvalidScalar(text.to_string());
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = numer.strip_prefix('-').unwrap_or(numer);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let n: BigInt = numer.parse().map_err(|_| err())?;
    let d: BigInt = match denom {
        None => BigInt::from(1),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) || d.starts_with('0') {
                return Err(err());
            }
            d.parse().map_err(|_| err())?
        }
    };
    Ok(BigRational::new(n, d))
}

/// Renders a scalar in the same literal grammar accepted by
/// [`parse_scalar_literal`]: `n` for integers, `n/d` otherwise.
pub fn format_scalar(s: &Scalar) -> String {
    s.to_string()
}

//! Exact rational scalars.
//!
//! All coefficients in this crate are arbitrary-precision rationals,
//! kept reduced (gcd(numerator, denominator) = 1, denominator > 0) by
//! the underlying [`BigRational`] representation. Zero is `0/1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::CherednikError;

/// Exact rational number used for every coefficient in the crate.
pub type Scalar = BigRational;

/// Shorthand for an integer scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`.
///
/// Panics on `d == 0`; use [`parse_scalar`] for fallible construction.
pub fn rat(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a scalar as `p/q`, omitting `/q` when the denominator is one.
pub fn format_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Parses `p` or `p/q` into a scalar.
pub fn parse_scalar(text: &str) -> Result<Scalar, CherednikError> {
    let t = text.trim();
    match t.split_once('/') {
        None => t
            .parse::<BigInt>()
            .map(BigRational::from_integer)
            .map_err(|_| CherednikError::Parse(format!("invalid rational `{t}`"))),
        Some((num, den)) => {
            let n = num
                .trim()
                .parse::<BigInt>()
                .map_err(|_| CherednikError::Parse(format!("invalid numerator `{num}`")))?;
            let d = den
                .trim()
                .parse::<BigInt>()
                .map_err(|_| CherednikError::Parse(format!("invalid denominator `{den}`")))?;
            if d.is_zero() {
                return Err(CherednikError::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Parses a comma-separated list of rationals, e.g. `0,1,-5/7`.
pub fn parse_scalar_list(text: &str) -> Result<Vec<Scalar>, CherednikError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(parse_scalar)
        .collect()
}

/// Integer power with negative exponents allowed (errors on 0^-n).
pub fn pow_scalar(s: &Scalar, e: i64) -> Result<Scalar, CherednikError> {
    if s.is_zero() && e < 0 {
        return Err(CherednikError::DivisionByZero);
    }
    Ok(s.pow(e as i32))
}

/// Absolute value.
pub fn abs_scalar(s: &Scalar) -> Scalar {
    s.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_representation() {
        let x = rat(4, -6);
        assert_eq!(format_scalar(&x), "-2/3");
        assert_eq!(format_scalar(&int(7)), "7");
        assert_eq!(format_scalar(&Scalar::zero()), "0");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["3", "-3", "5/7", "-5/7", "0"] {
            let v = parse_scalar(s).unwrap();
            assert_eq!(format_scalar(&v), s);
        }
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn list_parsing() {
        let v = parse_scalar_list("0,1,-5/7").unwrap();
        assert_eq!(v, vec![int(0), int(1), rat(-5, 7)]);
    }
}

//! Univariate polynomials in the deformation parameter `t`.
//!
//! The parameter `t` of the algebra family is kept symbolic so that the
//! degeneration `t -> 0` and the extraction of `t`-linear terms are exact
//! coefficient operations rather than limits.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{format_scalar, Scalar};

/// Polynomial in `t` with rational coefficients, indexed by degree.
///
/// Invariant: the trailing (highest-degree) coefficient is nonzero unless
/// the polynomial is zero, in which case the coefficient list is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    coeffs: Vec<Scalar>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TPoly::constant(Scalar::one())
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        TPoly {
            coeffs: vec![Scalar::zero(), Scalar::one()],
        }
    }

    pub fn constant(c: Scalar) -> Self {
        if c.is_zero() {
            TPoly::zero()
        } else {
            TPoly { coeffs: vec![c] }
        }
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        let mut p = TPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `t`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^d` (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> Scalar {
        self.coeffs.get(d).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Evaluates at a rational value of `t`.
    pub fn eval(&self, t: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

impl From<Scalar> for TPoly {
    fn from(c: Scalar) -> Self {
        TPoly::constant(c)
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        TPoly::from_coeffs(coeffs)
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        TPoly::from_coeffs(coeffs)
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(coeffs)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{}", format_scalar(c))?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{}*", format_scalar(c))?;
                    }
                    if d == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::int;

    #[test]
    fn coefficient_extraction() {
        // coeff(3 + 5t, 1) = 5, coeff(7, 1) = 0, coeff(t^2, 2) = 1
        let p = TPoly::from_coeffs(vec![int(3), int(5)]);
        assert_eq!(p.coeff(1), int(5));
        assert_eq!(TPoly::constant(int(7)).coeff(1), int(0));
        let t2 = &TPoly::t() * &TPoly::t();
        assert_eq!(t2.coeff(2), int(1));
        assert_eq!(t2.coeff(1), int(0));
    }

    #[test]
    fn trailing_invariant() {
        let p = TPoly::from_coeffs(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        let q = &p - &TPoly::one();
        assert!(q.is_zero());
        assert_eq!(q.degree(), None);
    }

    #[test]
    fn display_form() {
        let p = TPoly::from_coeffs(vec![int(3), int(5)]);
        assert_eq!(p.to_string(), "3 + 5*t");
        assert_eq!(TPoly::t().to_string(), "t");
    }
}

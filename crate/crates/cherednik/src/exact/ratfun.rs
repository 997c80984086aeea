//! Normalized rational functions in the coordinates.
//!
//! Invariants: the denominator is nonzero, gcd(numerator, denominator) is a
//! scalar, and the denominator's lexicographically leading coefficient is one.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::poly_gcd;
use super::multipoly::{format_poly, MultiPoly};
use super::scalar::Scalar;
use crate::error::{CherednikError, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFun {
    /// Builds `num/den` in normal form. Errors when `den = 0`.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<RatFun> {
        if den.is_zero() {
            return Err(CherednikError::DivisionByZero);
        }
        if num.nvars() != den.nvars() {
            return Err(CherednikError::Structure(
                "rational function with mismatched variable counts".into(),
            ));
        }
        if num.is_zero() {
            return Ok(RatFun {
                num,
                den: MultiPoly::one(den.nvars()),
            });
        }
        let g = poly_gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let (unit, monic_den) = den.monic();
        den = monic_den;
        num = num.scale(&(Scalar::one() / unit));
        Ok(RatFun { num, den })
    }

    pub fn from_poly(p: MultiPoly) -> RatFun {
        let den = MultiPoly::one(p.nvars());
        RatFun { num: p, den }
    }

    pub fn zero(nvars: usize) -> RatFun {
        RatFun::from_poly(MultiPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> RatFun {
        RatFun::from_poly(MultiPoly::one(nvars))
    }

    pub fn constant(nvars: usize, c: Scalar) -> RatFun {
        RatFun::from_poly(MultiPoly::constant(nvars, c))
    }

    pub fn var(nvars: usize, i: usize) -> RatFun {
        RatFun::from_poly(MultiPoly::var(nvars, i))
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The polynomial this function equals, if its denominator is one.
    pub fn as_poly(&self) -> Option<&MultiPoly> {
        if self.is_polynomial() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<RatFun> {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Scalar) -> RatFun {
        RatFun {
            num: self.num.scale(c),
            den: if c.is_zero() {
                MultiPoly::one(self.nvars())
            } else {
                self.den.clone()
            },
        }
    }

    /// Partial derivative (quotient rule).
    pub fn derivative(&self, i: usize) -> RatFun {
        let dn = self.num.derivative(i);
        let dd = self.den.derivative(i);
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        let den = &self.den * &self.den;
        RatFun::new(num, den).expect("denominator stays nonzero")
    }

    /// Evaluates at a point; errors when the denominator vanishes there.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        let d = self.den.eval(point);
        if num_traits::Zero::is_zero(&d) {
            return Err(CherednikError::DivisionByZero);
        }
        Ok(self.num.eval(point) / d)
    }

    /// Applies a permutation of the variables.
    pub fn permute_vars(&self, perm: &[usize]) -> RatFun {
        RatFun::new(self.num.permute_vars(perm), self.den.permute_vars(perm))
            .expect("permutation preserves nonzeroness")
    }

    /// Substitutes each variable by a polynomial (used by group actions).
    pub fn substitute_linear(&self, images: &[MultiPoly]) -> Result<RatFun> {
        RatFun::new(
            self.num.substitute_linear(images),
            self.den.substitute_linear(images),
        )
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        // common denominator through the gcd of the denominators, keeping
        // the intermediate polynomials as small as possible
        let g = poly_gcd(&self.den, &rhs.den);
        let aq = self.den.div_exact(&g).expect("gcd divides");
        let bq = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &bq) + &(&rhs.num * &aq);
        let den = &self.den * &bq;
        RatFun::new(num, den).expect("product of nonzero denominators")
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        // cross-cancel before multiplying; both operands are reduced, so
        // the result needs no further gcd beyond normalization
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let num = &self.num.div_exact(&g1).expect("gcd divides")
            * &rhs.num.div_exact(&g2).expect("gcd divides");
        let den = &self.den.div_exact(&g2).expect("gcd divides")
            * &rhs.den.div_exact(&g1).expect("gcd divides");
        RatFun::new(num, den).expect("product of nonzero denominators")
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        let r = rhs.recip().expect("division by zero rational function");
        self * &r
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.constant_term().is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(
                f,
                "({})/({})",
                format_poly(&self.num, None),
                format_poly(&self.den, None)
            )
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::int;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(2, i)
    }

    #[test]
    fn cancellation() {
        // (x1^2 - x2^2)/(x1 - x2) -> (x1 + x2)/1
        let f = RatFun::new(&x(0).pow(2) - &x(1).pow(2), &x(0) - &x(1)).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(*f.as_poly().unwrap(), &x(0) + &x(1));
    }

    #[test]
    fn content_removal() {
        // (2x1)/2 -> x1/1
        let f = RatFun::new(x(0).scale(&int(2)), MultiPoly::constant(2, int(2))).unwrap();
        assert_eq!(*f.as_poly().unwrap(), x(0));
    }

    #[test]
    fn sign_normalization() {
        // (x1 - x2)/(x2 - x1) -> -1
        let f = RatFun::new(&x(0) - &x(1), &x(1) - &x(0)).unwrap();
        assert_eq!(*f.as_poly().unwrap(), MultiPoly::constant(2, int(-1)));
    }

    #[test]
    fn normalize_idempotent() {
        let f = RatFun::new(&x(0) * &x(1), &x(0) - &x(1)).unwrap();
        let again = RatFun::new(f.numerator().clone(), f.denominator().clone()).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RatFun::new(x(0), MultiPoly::zero(2)).is_err());
    }

    #[test]
    fn arithmetic() {
        // 1/(x1-x2) + 1/(x2-x1) = 0
        let a = RatFun::new(MultiPoly::one(2), &x(0) - &x(1)).unwrap();
        let b = RatFun::new(MultiPoly::one(2), &x(1) - &x(0)).unwrap();
        assert!((&a + &b).is_zero());
        // derivative of 1/(x1-x2) in x1 is -1/(x1-x2)^2
        let d = a.derivative(0);
        let expect = RatFun::new(
            MultiPoly::constant(2, int(-1)),
            (&x(0) - &x(1)).pow(2),
        )
        .unwrap();
        assert_eq!(d, expect);
    }
}

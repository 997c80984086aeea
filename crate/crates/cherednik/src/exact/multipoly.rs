//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a `BTreeMap` from exponent vector to coefficient, so
//! iteration order is the lexicographic order on exponent vectors and all
//! arithmetic is canonical. No zero coefficients are stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{format_scalar, Scalar};
use crate::error::{CherednikError, Result};

/// Exponent vector of a monomial; all vectors in one polynomial share a length.
pub type Exponents = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, Scalar>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, Scalar::one())
    }

    /// The variable `x_i` (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exp, Scalar::one());
        MultiPoly { nvars, terms }
    }

    pub fn monomial(nvars: usize, exp: Exponents, c: Scalar) -> Self {
        assert_eq!(exp.len(), nvars);
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, iter: impl IntoIterator<Item = (Exponents, Scalar)>) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&d| d == 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &[u32]) -> Scalar {
        self.terms.get(exp).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    /// Adds `c * x^exp` in place.
    pub fn add_term(&mut self, exp: Exponents, c: Scalar) {
        assert_eq!(exp.len(), self.nvars, "exponent vector length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(CherednikError::Structure(format!(
                "polynomials over {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    /// Product; errors on mismatched variable counts.
    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut out = MultiPoly::one(self.nvars);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * Scalar::from_integer(e[i].into()));
        }
        out
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &d) in e.iter().enumerate() {
                for _ in 0..d {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Applies a linear change of variables `x_i -> sum_j m[i][j] x_j`.
    pub fn substitute_linear(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.nvars);
        let nv = images.first().map(|p| p.nvars).unwrap_or(self.nvars);
        let mut out = MultiPoly::zero(nv);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(nv, c.clone());
            for (i, &d) in e.iter().enumerate() {
                if d > 0 {
                    term = &term * &images[i].pow(d);
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Permutes variables: the result has `x_{perm[i]}` wherever `self` has `x_i`.
    pub fn permute_vars(&self, perm: &[usize]) -> MultiPoly {
        assert_eq!(perm.len(), self.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0u32; self.nvars];
            for (i, &d) in e.iter().enumerate() {
                e2[perm[i]] += d;
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Leading term in lexicographic order (largest exponent vector).
    pub fn leading(&self) -> Option<(&Exponents, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Exact division: returns `self / divisor` when the remainder is zero.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(divisor)?;
        if divisor.is_zero() {
            return Err(CherednikError::DivisionByZero);
        }
        let (lde, ldc) = divisor.leading().expect("nonzero divisor");
        let lde = lde.clone();
        let ldc = ldc.clone();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while let Some((re, rc)) = rem.leading() {
            let mut qe = Vec::with_capacity(self.nvars);
            for (a, b) in re.iter().zip(&lde) {
                if a < b {
                    return Err(CherednikError::InexactDivision);
                }
                qe.push(a - b);
            }
            let qc = rc / &ldc;
            let mono = MultiPoly::monomial(self.nvars, qe, qc);
            rem = &rem - &(&mono * divisor);
            quot = &quot + &mono;
        }
        Ok(quot)
    }

    /// Divides all coefficients by their common content, making the
    /// lexicographically leading coefficient one. Returns (unit, primitive part)
    /// with `self = unit * primitive`.
    pub fn monic(&self) -> (Scalar, MultiPoly) {
        match self.leading() {
            None => (Scalar::one(), self.clone()),
            Some((_, c)) => {
                let c = c.clone();
                (c.clone(), self.scale(&(Scalar::one() / c)))
            }
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&(-Scalar::one()))
    }
}

/// Pretty-prints with variable names `x1, x2, ...` unless names are supplied.
pub fn format_poly(p: &MultiPoly, names: Option<&[String]>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (e, c) in p.terms.iter().rev() {
        let mut factors = Vec::new();
        for (i, &d) in e.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let name = match names {
                Some(ns) => ns[i].clone(),
                None => format!("x{}", i + 1),
            };
            if d == 1 {
                factors.push(name);
            } else {
                factors.push(format!("{name}^{d}"));
            }
        }
        let body = factors.join("*");
        let part = if body.is_empty() {
            format_scalar(c)
        } else if c.is_one() {
            body
        } else if (-c).is_one() {
            format!("-{body}")
        } else {
            format!("{}*{}", format_scalar(c), body)
        };
        parts.push(part);
    }
    let mut out = String::new();
    for (i, part) in parts.iter().enumerate() {
        if i == 0 {
            out.push_str(part);
        } else if let Some(rest) = part.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(part);
        }
    }
    out
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(self, None))
    }
}

impl fmt::Debug for MultiPoly {
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
    fn difference_of_squares() {
        let p = &(&x(0) + &x(1)) * &(&x(0) - &x(1));
        let expect = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        assert_eq!(p, expect);
    }

    #[test]
    fn absorbing_zero() {
        let p = &x(0) + &x(1);
        assert!((&p * &MultiPoly::zero(2)).is_zero());
    }

    #[test]
    fn monomial_product() {
        let m = &x(0) * &x(1);
        let sq = &m * &m;
        assert_eq!(sq.coeff(&[2, 2]), int(1));
        assert_eq!(sq.num_terms(), 1);
    }

    #[test]
    fn mismatched_vars_error() {
        let p = MultiPoly::var(2, 0);
        let q = MultiPoly::var(3, 0);
        assert!(p.try_mul(&q).is_err());
    }

    #[test]
    fn exact_division() {
        let num = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        let den = &x(0) - &x(1);
        let q = num.div_exact(&den).unwrap();
        assert_eq!(q, &x(0) + &x(1));
        assert!((&x(0) * &x(0)).div_exact(&(&x(0) + &x(1))).is_err());
    }

    #[test]
    fn derivative_and_eval() {
        let p = &(&x(0) * &x(0)) * &x(1); // x1^2 x2
        assert_eq!(p.derivative(0), (&x(0) * &x(1)).scale(&int(2)));
        assert_eq!(p.eval(&[int(2), int(3)]), int(12));
    }
}

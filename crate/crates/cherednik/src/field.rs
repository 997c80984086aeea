//! Field abstraction for exact linear algebra.
//!
//! Almost everything in the crate runs over [`Scalar`] (the rationals).
//! Dihedral groups whose rotation angle has an irrational cosine need the
//! real cyclotomic field Q(2cos(2*pi/m)); [`CycReal`] provides it as
//! Q[z]/(Psi_m(z)) where Psi_m is the minimal polynomial of 2cos(2*pi/m).

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::exact::scalar::{format_scalar, int, Scalar};
use crate::exact::tpoly::TPoly;

/// Exact field operations used by the generic matrix code.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse; panics on zero (callers check first).
    fn inv(&self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Field for Scalar {
    fn zero(&self) -> Self {
        int(0)
    }
    fn one(&self) -> Self {
        int(1)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Self {
        int(1) / self
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// The `m`-th cyclotomic polynomial, by exact division of `t^m - 1` by the
/// cyclotomic polynomials of the proper divisors of `m`.
pub fn cyclotomic(m: u32) -> TPoly {
    let mut coeffs = vec![int(0); m as usize + 1];
    coeffs[0] = int(-1);
    coeffs[m as usize] = int(1);
    let mut p = TPoly::from_coeffs(coeffs);
    for d in 1..m {
        if m % d == 0 {
            p = tpoly_div_exact(&p, &cyclotomic(d));
        }
    }
    p
}

/// Minimal polynomial of `2cos(2*pi/m)` over the rationals.
///
/// For `m >= 3` the cyclotomic polynomial is palindromic of even degree
/// `2n`, and dividing by `t^n` expresses it in `u = t + 1/t` through the
/// recursion `V_0 = 2, V_1 = u, V_{j+1} = u V_j - V_{j-1}` (which satisfies
/// `V_j(t + 1/t) = t^j + t^{-j}`).
pub fn cos_minimal_poly(m: u32) -> TPoly {
    assert!(m >= 1);
    if m == 1 {
        return TPoly::from_coeffs(vec![int(-2), int(1)]); // z - 2
    }
    if m == 2 {
        return TPoly::from_coeffs(vec![int(2), int(1)]); // z + 2
    }
    let phi = cyclotomic(m);
    let n = phi.degree().expect("cyclotomic is nonzero") / 2;
    let mut v_prev = TPoly::constant(int(2));
    let mut v_cur = TPoly::t();
    let mut psi = TPoly::constant(phi.coeff(n));
    for j in 1..=n {
        psi = &psi + &v_cur.scale(&phi.coeff(n + j));
        let next = &(&TPoly::t() * &v_cur) - &v_prev;
        v_prev = v_cur;
        v_cur = next;
    }
    psi
}

fn tpoly_div_exact(a: &TPoly, b: &TPoly) -> TPoly {
    let db = b.degree().expect("nonzero divisor");
    let lb = b.coeff(db);
    let mut rem = a.clone();
    let mut quot = vec![int(0); a.degree().map(|d| d + 1).unwrap_or(1)];
    while let Some(dr) = rem.degree() {
        if dr < db {
            panic!("inexact univariate division");
        }
        let q = rem.coeff(dr) / &lb;
        quot[dr - db] = q.clone();
        let mut sub = vec![int(0); dr + 1];
        for j in 0..=db {
            sub[dr - db + j] = &q * &b.coeff(j);
        }
        rem = &rem - &TPoly::from_coeffs(sub);
    }
    TPoly::from_coeffs(quot)
}

/// Shared description of the field Q(2cos(2*pi/m)).
#[derive(Debug)]
pub struct CycRealField {
    pub m: u32,
    /// Minimal polynomial of the generator, monic.
    pub minpoly: TPoly,
    pub degree: usize,
}

impl CycRealField {
    pub fn new(m: u32) -> Arc<CycRealField> {
        let minpoly = cos_minimal_poly(m);
        let degree = minpoly.degree().expect("minimal polynomial nonzero");
        Arc::new(CycRealField { m, minpoly, degree })
    }

    pub fn zero(self: &Arc<Self>) -> CycReal {
        CycReal {
            field: self.clone(),
            coeffs: vec![int(0); self.degree],
        }
    }

    pub fn from_scalar(self: &Arc<Self>, c: Scalar) -> CycReal {
        let mut z = self.zero();
        z.coeffs[0] = c;
        z
    }

    /// The generator `2cos(2*pi/m)`.
    pub fn generator(self: &Arc<Self>) -> CycReal {
        let mut z = self.zero();
        if self.degree == 1 {
            // 2cos(2*pi/m) is rational; minpoly = z - c
            z.coeffs[0] = -self.minpoly.coeff(0);
        } else {
            z.coeffs[1] = int(1);
        }
        z
    }
}

/// Element of Q(2cos(2*pi/m)) as a polynomial in the generator, reduced
/// modulo the minimal polynomial.
#[derive(Clone)]
pub struct CycReal {
    field: Arc<CycRealField>,
    coeffs: Vec<Scalar>,
}

impl CycReal {
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn field(&self) -> &Arc<CycRealField> {
        &self.field
    }

    fn reduce(field: &Arc<CycRealField>, mut raw: Vec<Scalar>) -> CycReal {
        let d = field.degree;
        // divide by the monic minimal polynomial, keep the remainder
        while raw.len() > d {
            let top = raw.len() - 1;
            let c = raw[top].clone();
            if !Zero::is_zero(&c) {
                for j in 0..d {
                    let adj = &c * &field.minpoly.coeff(j);
                    raw[top - d + j] -= adj;
                }
            }
            raw.pop();
        }
        raw.resize(d, int(0));
        CycReal {
            field: field.clone(),
            coeffs: raw,
        }
    }

    /// Numeric value, for diagnostics.
    pub fn to_f64(&self) -> f64 {
        let gen = 2.0 * (std::f64::consts::PI * 2.0 / self.field.m as f64).cos();
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            let cf = rational_to_f64(c);
            acc = acc * gen + cf;
        }
        acc
    }
}

fn rational_to_f64(c: &Scalar) -> f64 {
    let n: f64 = c.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = c.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

impl PartialEq for CycReal {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl fmt::Debug for CycReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(*c))
            .map(|(i, c)| match i {
                0 => format_scalar(c),
                1 => format!("{}*w", format_scalar(c)),
                _ => format!("{}*w^{}", format_scalar(c), i),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Field for CycReal {
    fn zero(&self) -> Self {
        self.field.zero()
    }
    fn one(&self) -> Self {
        self.field.from_scalar(int(1))
    }
    fn add(&self, rhs: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycReal {
            field: self.field.clone(),
            coeffs,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycReal {
            field: self.field.clone(),
            coeffs,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut raw = vec![int(0); 2 * self.field.degree];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        CycReal::reduce(&self.field, raw)
    }
    fn inv(&self) -> Self {
        // extended Euclid on (element as polynomial, minimal polynomial)
        assert!(!Field::is_zero(self), "inverse of zero");
        let d = self.field.degree;
        let mut r0: Vec<Scalar> = (0..=d).map(|j| self.field.minpoly.coeff(j)).collect();
        let mut r1 = self.coeffs.clone();
        trim_poly(&mut r0);
        trim_poly(&mut r1);
        let mut s0 = vec![int(0)];
        let mut s1 = vec![int(1)];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 = gcd (a nonzero constant, since minpoly is squarefree over Q
        // and the element is nonzero of smaller degree)
        assert_eq!(r0.len(), 1, "element not invertible modulo minimal polynomial");
        let c = r0[0].clone();
        let coeffs = s0.iter().map(|v| v / &c).collect();
        CycReal::reduce(&self.field, coeffs)
    }
    fn neg(&self) -> Self {
        CycReal {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

fn trim_poly(p: &mut Vec<Scalar>) {
    while matches!(p.last(), Some(c) if Zero::is_zero(c)) {
        p.pop();
    }
}

fn poly_divmod(a: &[Scalar], b: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().expect("nonzero divisor").clone();
    let mut quot = vec![int(0); a.len().saturating_sub(db)];
    while rem.len() > db || (rem.len() == b.len() && !rem.is_empty() && db == 0) {
        if rem.len() < b.len() {
            break;
        }
        let dr = rem.len() - 1;
        let q = rem[dr].clone() / &lb;
        quot[dr - db] = q.clone();
        for j in 0..=db {
            let adj = &q * &b[j];
            rem[dr - db + j] -= adj;
        }
        trim_poly(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    (quot, rem)
}

fn poly_mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![int(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_poly(&mut out);
    out
}

fn poly_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let n = a.len().max(b.len());
    let mut out = vec![int(0); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim_poly(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::rat;

    #[test]
    fn rational_cosines() {
        // 2cos(2pi/m) for m = 1,2,3,4,6 is integral: 2, -2, -1, 0, 1
        for (m, v) in [(1, 2), (2, -2), (3, -1), (4, 0), (6, 1)] {
            let p = cos_minimal_poly(m);
            assert_eq!(p.degree(), Some(1));
            assert_eq!(p.eval(&int(v)), int(0), "m={m}");
        }
    }

    #[test]
    fn degree_five_and_seven() {
        // z^2 + z - 1 for m=5; z^3 + z^2 - 2z - 1 for m=7
        let p5 = cos_minimal_poly(5);
        assert_eq!(p5.coeffs().to_vec(), vec![int(-1), int(1), int(1)]);
        let p7 = cos_minimal_poly(7);
        assert_eq!(p7.coeffs().to_vec(), vec![int(-1), int(-2), int(1), int(1)]);
    }

    #[test]
    fn field_arithmetic_m5() {
        let f = CycRealField::new(5);
        let w = f.generator();
        // w^2 = 1 - w  (from z^2 + z - 1 = 0)
        let w2 = w.mul(&w);
        let expect = f.from_scalar(int(1)).sub(&w);
        assert_eq!(w2, expect);
        // inverse: w * w^{-1} = 1
        let winv = w.inv();
        assert_eq!(w.mul(&winv), f.from_scalar(int(1)));
        // numeric sanity: w ~ 0.618
        assert!((w.to_f64() - 0.618033988).abs() < 1e-6);
        let _ = rat(1, 2);
    }
}

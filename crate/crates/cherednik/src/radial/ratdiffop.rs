//! Differential operators with rational-function coefficients, and their
//! group-smashed version for the Dunkl calculus of the symmetric family.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{CherednikError, Result};
use crate::exact::multipoly::MultiPoly;
use crate::exact::ratfun::RatFun;
use crate::exact::scalar::{int, Scalar};

/// `sum_beta c_beta(x) d^beta` with normalized rational coefficients.
#[derive(Clone, PartialEq)]
pub struct RatDiffOp {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, RatFun>,
}

impl RatDiffOp {
    pub fn zero(nvars: usize) -> Self {
        RatDiffOp {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(nvars: usize) -> Self {
        RatDiffOp::from_coeff(RatFun::one(nvars))
    }

    pub fn from_coeff(f: RatFun) -> Self {
        let mut op = RatDiffOp::zero(f.nvars());
        op.add_term(vec![0; f.nvars()], f);
        op
    }

    pub fn scalar(nvars: usize, c: Scalar) -> Self {
        RatDiffOp::from_coeff(RatFun::constant(nvars, c))
    }

    /// The derivative in direction i.
    pub fn d(nvars: usize, i: usize) -> Self {
        let mut beta = vec![0; nvars];
        beta[i] = 1;
        let mut op = RatDiffOp::zero(nvars);
        op.add_term(beta, RatFun::one(nvars));
        op
    }

    /// Multiplication by the coordinate x_i.
    pub fn x(nvars: usize, i: usize) -> Self {
        RatDiffOp::from_coeff(RatFun::var(nvars, i))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, beta: Vec<u32>, f: RatFun) {
        if f.is_zero() {
            return;
        }
        assert_eq!(beta.len(), self.nvars);
        match self.terms.entry(beta) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(f);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = &*o.get() + &f;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &RatFun)> {
        self.terms.iter()
    }

    pub fn coeff(&self, beta: &[u32]) -> RatFun {
        self.terms
            .get(beta)
            .cloned()
            .unwrap_or_else(|| RatFun::zero(self.nvars))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total order (max |beta|).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|b| b.iter().sum()).max()
    }

    pub fn add(&self, rhs: &RatDiffOp) -> RatDiffOp {
        let mut out = self.clone();
        for (b, f) in &rhs.terms {
            out.add_term(b.clone(), f.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &RatDiffOp) -> RatDiffOp {
        let mut out = self.clone();
        for (b, f) in &rhs.terms {
            out.add_term(b.clone(), -f);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> RatDiffOp {
        let mut out = RatDiffOp::zero(self.nvars);
        for (b, f) in &self.terms {
            out.add_term(b.clone(), f.scale(c));
        }
        out
    }

    pub fn scale_fun(&self, c: &RatFun) -> RatDiffOp {
        let mut out = RatDiffOp::zero(self.nvars);
        for (b, f) in &self.terms {
            out.add_term(b.clone(), f * c);
        }
        out
    }

    /// Operator composition: `self` applied after `rhs`.
    pub fn compose(&self, rhs: &RatDiffOp) -> RatDiffOp {
        let mut out = RatDiffOp::zero(self.nvars);
        for (beta, f) in &self.terms {
            for (gamma, g) in &rhs.terms {
                // d^beta (g d^gamma) = sum_{mu <= beta} C(beta, mu)
                //   (d^{beta-mu} g) d^{mu+gamma}
                for (mu, binom) in sub_multi_indices(beta) {
                    let mut dg = g.clone();
                    let mut vanished = false;
                    for (i, &d) in beta.iter().enumerate() {
                        for _ in 0..(d - mu[i]) {
                            dg = dg.derivative(i);
                            if dg.is_zero() {
                                vanished = true;
                                break;
                            }
                        }
                        if vanished {
                            break;
                        }
                    }
                    if vanished || dg.is_zero() {
                        continue;
                    }
                    let idx: Vec<u32> = mu.iter().zip(gamma).map(|(a, b)| a + b).collect();
                    let coeff = f * &dg.scale(&int(binom));
                    out.add_term(idx, coeff);
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &RatDiffOp) -> RatDiffOp {
        self.compose(rhs).sub(&rhs.compose(self))
    }

    /// Applies the operator to a rational function.
    pub fn apply(&self, f: &RatFun) -> RatFun {
        let mut out = RatFun::zero(self.nvars);
        for (beta, c) in &self.terms {
            let mut df = f.clone();
            let mut vanished = false;
            for (i, &d) in beta.iter().enumerate() {
                for _ in 0..d {
                    df = df.derivative(i);
                    if df.is_zero() {
                        vanished = true;
                        break;
                    }
                }
                if vanished {
                    break;
                }
            }
            if vanished {
                continue;
            }
            out = &out + &(c * &df);
        }
        out
    }

    pub fn apply_poly(&self, p: &MultiPoly) -> RatFun {
        self.apply(&RatFun::from_poly(p.clone()))
    }

    /// Renames variables by a permutation (conjugation by the permutation
    /// action): coordinates and derivative slots move together.
    pub fn permute_vars(&self, perm: &[usize]) -> RatDiffOp {
        let mut out = RatDiffOp::zero(self.nvars);
        for (beta, f) in &self.terms {
            let mut b2 = vec![0; self.nvars];
            for (i, &d) in beta.iter().enumerate() {
                b2[perm[i]] = d;
            }
            out.add_term(b2, f.permute_vars(perm));
        }
        out
    }

    /// Principal part: the terms of maximal total order.
    pub fn principal(&self) -> RatDiffOp {
        let Some(m) = self.order() else {
            return self.clone();
        };
        let mut out = RatDiffOp::zero(self.nvars);
        for (b, f) in &self.terms {
            if b.iter().sum::<u32>() == m {
                out.add_term(b.clone(), f.clone());
            }
        }
        out
    }
}

fn sub_multi_indices(beta: &[u32]) -> Vec<(Vec<u32>, i64)> {
    let mut out = vec![(Vec::new(), 1i64)];
    for &b in beta {
        let mut next = Vec::new();
        for (prefix, coeff) in &out {
            for m in 0..=b {
                let mut p = prefix.clone();
                p.push(m);
                next.push((p, coeff * binomial(b as i64, m as i64)));
            }
        }
        out = next;
    }
    out
}

fn binomial(n: i64, k: i64) -> i64 {
    let mut acc = 1i64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl fmt::Debug for RatDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| {
                let mut ds = Vec::new();
                for (i, &d) in b.iter().enumerate() {
                    if d == 1 {
                        ds.push(format!("d{}", i + 1));
                    } else if d > 1 {
                        ds.push(format!("d{}^{}", i + 1, d));
                    }
                }
                if ds.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c}) {}", ds.join(" "))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Display for RatDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Smash product of operators with the symmetric group: terms `D_w * w`
/// composed by `(D u)(E v) = (D (u E u^{-1})) (u v)` where conjugation
/// permutes coordinates and derivative slots.
#[derive(Clone, PartialEq)]
pub struct SmashOp {
    pub n: usize,
    terms: BTreeMap<Vec<usize>, RatDiffOp>,
}

impl SmashOp {
    pub fn zero(n: usize) -> Self {
        SmashOp {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar_op(n: usize, op: RatDiffOp) -> Self {
        let mut s = SmashOp::zero(n);
        s.add_term((0..n).collect(), op);
        s
    }

    pub fn perm(n: usize, w: Vec<usize>) -> Self {
        let mut s = SmashOp::zero(n);
        s.add_term(w, RatDiffOp::identity(n));
        s
    }

    pub fn add_term(&mut self, w: Vec<usize>, op: RatDiffOp) {
        if op.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(op);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&op);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &RatDiffOp)> {
        self.terms.iter()
    }

    pub fn add(&self, rhs: &SmashOp) -> SmashOp {
        let mut out = self.clone();
        for (w, op) in &rhs.terms {
            out.add_term(w.clone(), op.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &SmashOp) -> SmashOp {
        let mut out = self.clone();
        for (w, op) in &rhs.terms {
            out.add_term(w.clone(), op.scale(&int(-1)));
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> SmashOp {
        let mut out = SmashOp::zero(self.n);
        for (w, op) in &self.terms {
            out.add_term(w.clone(), op.scale(c));
        }
        out
    }

    pub fn compose(&self, rhs: &SmashOp) -> SmashOp {
        let mut out = SmashOp::zero(self.n);
        for (u, du) in &self.terms {
            for (v, dv) in &rhs.terms {
                let moved = dv.permute_vars(u);
                let w: Vec<usize> = (0..self.n).map(|i| u[v[i]]).collect();
                out.add_term(w, du.compose(&moved));
            }
        }
        out
    }

    /// The scalar operator the element induces on W-invariant functions:
    /// the sum of the operator parts.
    pub fn collapse_on_invariants(&self) -> RatDiffOp {
        let mut acc = RatDiffOp::zero(self.n);
        for op in self.terms.values() {
            acc = acc.add(op);
        }
        acc
    }

    /// Applies to a function: each term acts as `D_w (w f)`.
    pub fn apply(&self, f: &RatFun) -> RatFun {
        let mut out = RatFun::zero(f.nvars());
        for (w, op) in &self.terms {
            let moved = f.permute_vars(w);
            out = &out + &op.apply(&moved);
        }
        out
    }
}

impl fmt::Debug for SmashOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, op)| format!("[{op:?}]*{w:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Builds the symmetrizer or sign-weighted symmetrizer as a smash element.
pub fn smash_idempotent(n: usize, signed: bool) -> SmashOp {
    let spec = crate::groups::spec::GroupSpec::symmetric(n);
    let order = Scalar::from_integer((spec.order() as i64).into());
    let mut out = SmashOp::zero(n);
    for g in spec.elements() {
        let s = if signed {
            spec.sign(&g).expect("symmetric family has a sign")
        } else {
            int(1)
        };
        out.add_term(
            g.perm.clone(),
            RatDiffOp::scalar(n, s / &order),
        );
    }
    out
}

/// Errors when the rational function is not a polynomial.
pub fn expect_poly(f: &RatFun) -> Result<MultiPoly> {
    f.as_poly().cloned().ok_or_else(|| {
        CherednikError::Internal("expected a polynomial result".into())
    })
}

/// Checks the canonical commutation relation [d_i, x_j] = delta_ij on a
/// couple of operators, as a construction sanity test.
pub fn canonical_commutation_ok(nvars: usize) -> bool {
    for i in 0..nvars {
        for j in 0..nvars {
            let c = RatDiffOp::d(nvars, i).commutator(&RatDiffOp::x(nvars, j));
            let expect = if i == j {
                RatDiffOp::identity(nvars)
            } else {
                RatDiffOp::zero(nvars)
            };
            if c != expect {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_pairs() {
        assert!(canonical_commutation_ok(3));
    }

    #[test]
    fn composition_associative() {
        let n = 2;
        let a = RatDiffOp::d(n, 0).compose(&RatDiffOp::x(n, 0));
        let b = RatDiffOp::from_coeff(
            RatFun::new(
                MultiPoly::one(n),
                &MultiPoly::var(n, 0) - &MultiPoly::var(n, 1),
            )
            .unwrap(),
        );
        let c = RatDiffOp::d(n, 1);
        let lhs = a.compose(&b).compose(&c);
        let rhs = a.compose(&b.compose(&c));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn application_matches_composition() {
        let n = 2;
        let op1 = RatDiffOp::d(n, 0);
        let op2 = RatDiffOp::from_coeff(RatFun::var(n, 0)).compose(&RatDiffOp::d(n, 1));
        let f = RatFun::from_poly(
            &MultiPoly::var(n, 0).pow(2) * &MultiPoly::var(n, 1).pow(2),
        );
        let lhs = op1.compose(&op2).apply(&f);
        let rhs = op1.apply(&op2.apply(&f));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn smash_composition() {
        // s * d_1 * s = d_2 for the transposition
        let n = 2;
        let s = SmashOp::perm(n, vec![1, 0]);
        let d1 = SmashOp::scalar_op(n, RatDiffOp::d(n, 0));
        let conj = s.compose(&d1).compose(&s);
        let expect = SmashOp::scalar_op(n, RatDiffOp::d(n, 1));
        assert_eq!(conj, expect);
    }

    #[test]
    fn idempotents() {
        for signed in [false, true] {
            let e = smash_idempotent(3, signed);
            assert_eq!(e.compose(&e), e);
        }
    }
}

//! PBW normal forms and products in the symplectic reflection algebra.
//!
//! Elements are stored in the basis `x^a y^b w` (x-exponents, y-exponents,
//! group element) with coefficients in Q[t]. Products are computed by
//! multiplying one generator at a time onto the right of a normal form;
//! the only rewriting rule that creates new terms is pushing a single `x`
//! through a block of `y`s, which consumes `kappa(y_i, x_r)` and strictly
//! lowers the y-degree, so the recursion terminates.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{CherednikError, Result};
use crate::exact::scalar::{format_scalar, Scalar};
use crate::exact::tpoly::TPoly;
use crate::groups::algebra::GroupAlgebra;
use crate::groups::element::GroupElement;
use crate::groups::kappa::{build_kappa, ClassFunction, KappaPairing};
use crate::groups::spec::GroupSpec;
use crate::linalg::QMatrix;

/// One algebra instance: the group, the class function and the value of t
/// (symbolic or specialized). Immutable; shared by its elements.
pub struct Algebra {
    pub spec: GroupSpec,
    pub c: ClassFunction,
    pub t: TPoly,
    kappa: KappaPairing,
    /// cached action matrices for every group element
    actions: BTreeMap<GroupElement, QMatrix>,
}

impl Algebra {
    pub fn new(spec: GroupSpec, c: ClassFunction, t: TPoly) -> Result<Arc<Algebra>> {
        let kappa = build_kappa(&spec, &c, &t)?;
        let mut actions = BTreeMap::new();
        for g in spec.elements() {
            let m = spec.action_matrix(&g)?;
            actions.insert(g, m);
        }
        Ok(Arc::new(Algebra {
            spec,
            c,
            t,
            kappa,
            actions,
        }))
    }

    /// Rational Cherednik algebra of S_n with constant parameter c.
    pub fn symmetric(n: usize, c: Scalar, t: TPoly) -> Result<Arc<Algebra>> {
        let spec = GroupSpec::symmetric(n);
        let cf = ClassFunction::constant(&spec, c)?;
        Algebra::new(spec, cf, t)
    }

    pub fn nvars(&self) -> usize {
        self.spec.num_xvars()
    }

    pub fn kappa(&self) -> &KappaPairing {
        &self.kappa
    }

    pub fn action(&self, g: &GroupElement) -> &QMatrix {
        self.actions.get(g).expect("element of the group")
    }

    pub fn has_symbolic_t(&self) -> bool {
        self.t == TPoly::t()
    }

    pub fn is_t_zero(&self) -> bool {
        self.t.is_zero()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.c == other.c && self.t == other.t
    }
}

/// PBW monomial: `x^x_exp * y^y_exp * w`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PbwMonomial {
    pub x: Vec<u32>,
    pub y: Vec<u32>,
    pub w: GroupElement,
}

impl PbwMonomial {
    pub fn degree(&self) -> u32 {
        self.x.iter().sum::<u32>() + self.y.iter().sum::<u32>()
    }
}

/// Generator of the algebra, used to spell out words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Gen {
    X(usize),
    Y(usize),
    W(GroupElement),
}

/// Element in PBW normal form.
#[derive(Clone)]
pub struct SraElement {
    pub algebra: Arc<Algebra>,
    terms: BTreeMap<PbwMonomial, TPoly>,
}

impl SraElement {
    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        SraElement {
            algebra: algebra.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(algebra: &Arc<Algebra>) -> Self {
        SraElement::group(algebra, algebra.spec.identity())
    }

    pub fn scalar(algebra: &Arc<Algebra>, c: TPoly) -> Self {
        let mut e = SraElement::zero(algebra);
        e.add_term(
            PbwMonomial {
                x: vec![0; algebra.nvars()],
                y: vec![0; algebra.nvars()],
                w: algebra.spec.identity(),
            },
            c,
        );
        e
    }

    pub fn x(algebra: &Arc<Algebra>, i: usize) -> Self {
        let n = algebra.nvars();
        assert!(i < n);
        let mut x = vec![0; n];
        x[i] = 1;
        let mut e = SraElement::zero(algebra);
        e.add_term(
            PbwMonomial {
                x,
                y: vec![0; n],
                w: algebra.spec.identity(),
            },
            TPoly::one(),
        );
        e
    }

    pub fn y(algebra: &Arc<Algebra>, i: usize) -> Self {
        let n = algebra.nvars();
        assert!(i < n);
        let mut y = vec![0; n];
        y[i] = 1;
        let mut e = SraElement::zero(algebra);
        e.add_term(
            PbwMonomial {
                x: vec![0; n],
                y,
                w: algebra.spec.identity(),
            },
            TPoly::one(),
        );
        e
    }

    pub fn group(algebra: &Arc<Algebra>, g: GroupElement) -> Self {
        let n = algebra.nvars();
        let mut e = SraElement::zero(algebra);
        e.add_term(
            PbwMonomial {
                x: vec![0; n],
                y: vec![0; n],
                w: g,
            },
            TPoly::one(),
        );
        e
    }

    pub fn from_group_algebra(algebra: &Arc<Algebra>, a: &GroupAlgebra) -> Self {
        let n = algebra.nvars();
        let mut e = SraElement::zero(algebra);
        for (g, c) in a.terms() {
            e.add_term(
                PbwMonomial {
                    x: vec![0; n],
                    y: vec![0; n],
                    w: g.clone(),
                },
                c.clone(),
            );
        }
        e
    }

    /// The symmetrizer idempotent as an element.
    pub fn symmetrizer(algebra: &Arc<Algebra>) -> Self {
        SraElement::from_group_algebra(algebra, &GroupAlgebra::symmetrizer(&algebra.spec))
    }

    /// The antisymmetrizer idempotent (Coxeter families).
    pub fn antisymmetrizer(algebra: &Arc<Algebra>) -> Result<Self> {
        Ok(SraElement::from_group_algebra(
            algebra,
            &GroupAlgebra::antisymmetrizer(&algebra.spec)?,
        ))
    }

    /// A basis vector of V by index: `x_i` for `i < n`, `y_{i-n}` otherwise.
    pub fn basis_vector(algebra: &Arc<Algebra>, idx: usize) -> Self {
        let n = algebra.nvars();
        if idx < n {
            SraElement::x(algebra, idx)
        } else {
            SraElement::y(algebra, idx - n)
        }
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: TPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &TPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> TPoly {
        self.terms.get(m).cloned().unwrap_or_else(TPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Filtration degree: max over terms of |x| + |y|.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// True when every monomial is a pure group term.
    pub fn is_group_algebra(&self) -> bool {
        self.terms
            .keys()
            .all(|m| m.x.iter().all(|&d| d == 0) && m.y.iter().all(|&d| d == 0))
    }

    pub fn to_group_algebra(&self) -> Option<GroupAlgebra> {
        if !self.is_group_algebra() {
            return None;
        }
        let mut a = GroupAlgebra::zero(&self.algebra.spec);
        for (m, c) in &self.terms {
            a.add_term(m.w.clone(), c.clone());
        }
        Some(a)
    }

    pub fn scale(&self, c: &TPoly) -> SraElement {
        let mut out = SraElement::zero(&self.algebra);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    pub fn add(&self, rhs: &SraElement) -> Result<SraElement> {
        self.check_algebra(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &SraElement) -> Result<SraElement> {
        self.check_algebra(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    fn check_algebra(&self, rhs: &SraElement) -> Result<()> {
        if *self.algebra != *rhs.algebra {
            return Err(CherednikError::Structure(
                "elements of different algebra instances".into(),
            ));
        }
        Ok(())
    }

    /// Multiplies by a single generator on the right.
    pub fn mul_gen(&self, gen: &Gen) -> SraElement {
        let alg = &self.algebra;
        let n = alg.nvars();
        let mut out = SraElement::zero(alg);
        for (m, coeff) in &self.terms {
            match gen {
                Gen::W(g) => {
                    let mut m2 = m.clone();
                    m2.w = alg.spec.mul(&m.w, g);
                    out.add_term(m2, coeff.clone());
                }
                Gen::X(i) | Gen::Y(i) => {
                    // w * v = w(v) * w for v in V
                    let col = match gen {
                        Gen::X(_) => *i,
                        Gen::Y(_) => n + *i,
                        Gen::W(_) => unreachable!(),
                    };
                    let act = alg.action(&m.w);
                    for r in 0..2 * n {
                        let a = &act[(r, col)];
                        if Zero::is_zero(a) {
                            continue;
                        }
                        let c = coeff.scale(a);
                        if r >= n {
                            // y-component: append to the y block
                            let mut m2 = m.clone();
                            m2.y[r - n] += 1;
                            out.add_term(m2, c);
                        } else {
                            // x-component: push x_r through y^b
                            let pushed = push_x_through_y(alg, &m.y, r);
                            for (pm, pc) in pushed.terms {
                                // assemble x^a * (pm) * w
                                let mut m2 = PbwMonomial {
                                    x: m.x.clone(),
                                    y: pm.y,
                                    w: alg.spec.mul(&pm.w, &m.w),
                                };
                                for (xi, d) in m2.x.iter_mut().zip(&pm.x) {
                                    *xi += d;
                                }
                                out.add_term(m2, &c * &pc);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Full product of two normal forms.
    pub fn mul(&self, rhs: &SraElement) -> Result<SraElement> {
        self.check_algebra(rhs)?;
        let mut out = SraElement::zero(&self.algebra);
        for (m, coeff) in &rhs.terms {
            let mut acc = self.scale(coeff);
            for (i, &d) in m.x.iter().enumerate() {
                for _ in 0..d {
                    acc = acc.mul_gen(&Gen::X(i));
                }
            }
            for (i, &d) in m.y.iter().enumerate() {
                for _ in 0..d {
                    acc = acc.mul_gen(&Gen::Y(i));
                }
            }
            if !m.w.is_identity() {
                acc = acc.mul_gen(&Gen::W(m.w.clone()));
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }

    pub fn commutator(&self, rhs: &SraElement) -> Result<SraElement> {
        let ab = self.mul(rhs)?;
        let ba = rhs.mul(self)?;
        ab.sub(&ba)
    }

    pub fn pow(&self, e: u32) -> Result<SraElement> {
        let mut out = SraElement::one(&self.algebra);
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Specializes every coefficient at t = 0 (the quasi-classical part).
    pub fn t0_part(&self) -> SraElement {
        let mut out = SraElement::zero(&self.algebra);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), TPoly::constant(c.coeff(0)));
        }
        out
    }

    /// Extracts the coefficient of t^1 as a constant-coefficient element.
    pub fn t1_part(&self) -> SraElement {
        let mut out = SraElement::zero(&self.algebra);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), TPoly::constant(c.coeff(1)));
        }
        out
    }
}

/// Normal form of `y^b * x_r`, recursing on the rightmost y factor:
/// `y^b x_r = y^{b - e_i} x_r y_i + y^{b - e_i} kappa(y_i, x_r)`.
fn push_x_through_y(alg: &Arc<Algebra>, yexp: &[u32], r: usize) -> SraElement {
    let n = alg.nvars();
    let Some(i) = (0..n).rev().find(|&i| yexp[i] > 0) else {
        let alg = alg.clone();
        return SraElement::x(&alg, r);
    };
    let mut b1 = yexp.to_vec();
    b1[i] -= 1;
    // first summand: (y^{b-e_i} x_r) * y_i
    let head = push_x_through_y(alg, &b1, r);
    let mut out = head.mul_gen(&Gen::Y(i));
    // second summand: y^{b-e_i} * kappa(y_i, x_r)
    let k = alg.kappa().basis(n + i, r);
    for (g, c) in k.terms() {
        out.add_term(
            PbwMonomial {
                x: vec![0; n],
                y: b1.clone(),
                w: g.clone(),
            },
            c.clone(),
        );
    }
    out
}

/// Normal form of an arbitrary word in the generators.
pub fn normal_form(alg: &Arc<Algebra>, word: &[Gen]) -> SraElement {
    let mut acc = SraElement::one(alg);
    for g in word {
        acc = acc.mul_gen(g);
    }
    acc
}

impl PartialEq for SraElement {
    fn eq(&self, other: &Self) -> bool {
        *self.algebra == *other.algebra && self.terms == other.terms
    }
}

impl fmt::Debug for SraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut factors = Vec::new();
                for (i, &d) in m.x.iter().enumerate() {
                    if d == 1 {
                        factors.push(format!("x{}", i + 1));
                    } else if d > 1 {
                        factors.push(format!("x{}^{}", i + 1, d));
                    }
                }
                for (i, &d) in m.y.iter().enumerate() {
                    if d == 1 {
                        factors.push(format!("y{}", i + 1));
                    } else if d > 1 {
                        factors.push(format!("y{}^{}", i + 1, d));
                    }
                }
                if !m.w.is_identity() {
                    factors.push(format!("{:?}", m.w));
                }
                let body = if factors.is_empty() {
                    "1".to_string()
                } else {
                    factors.join("*")
                };
                if c.is_constant() && c.coeff(0).is_one() {
                    body
                } else if c.is_constant() {
                    format!("{}*{}", format_scalar(&c.coeff(0)), body)
                } else {
                    format!("({})*{}", c, body)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::int;

    fn h_sn(n: usize, c: i64) -> Arc<Algebra> {
        Algebra::symmetric(n, int(c), TPoly::t()).unwrap()
    }

    #[test]
    fn basic_relations_s2() {
        let alg = h_sn(2, 1);
        let x1 = SraElement::x(&alg, 0);
        let x2 = SraElement::x(&alg, 1);
        let y1 = SraElement::y(&alg, 0);
        let s = SraElement::group(&alg, GroupElement::transposition(2, 0, 1));

        // y1 x1 = x1 y1 + t - s12
        let p = y1.mul(&x1).unwrap();
        let mut expect = x1.mul(&y1).unwrap();
        expect = expect
            .add(&SraElement::scalar(&alg, TPoly::t()))
            .unwrap()
            .sub(&s)
            .unwrap();
        assert_eq!(p, expect);

        // y1 x2 = x2 y1 + s12
        let p = y1.mul(&x2).unwrap();
        let expect = x2.mul(&y1).unwrap().add(&s).unwrap();
        assert_eq!(p, expect);

        // s12 x1 = x2 s12
        let p = s.mul(&x1).unwrap();
        let expect = x2.mul(&s).unwrap();
        assert_eq!(p, expect);
    }

    #[test]
    fn xs_commute_and_ys_commute() {
        let alg = h_sn(3, 1);
        let x1 = SraElement::x(&alg, 0);
        let x2 = SraElement::x(&alg, 1);
        let y1 = SraElement::y(&alg, 0);
        let y3 = SraElement::y(&alg, 2);
        assert!(x1.commutator(&x2).unwrap().is_zero());
        assert!(y1.commutator(&y3).unwrap().is_zero());
    }

    #[test]
    fn associativity_instance() {
        // (x1 y1) * (x1 y1) = x1 * (y1 x1) * y1
        let alg = h_sn(2, 1);
        let x1 = SraElement::x(&alg, 0);
        let y1 = SraElement::y(&alg, 0);
        let xy = x1.mul(&y1).unwrap();
        let lhs = xy.mul(&xy).unwrap();
        let rhs = x1.mul(&y1.mul(&x1).unwrap()).unwrap().mul(&y1).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_laws() {
        let alg = h_sn(2, 1);
        let one = SraElement::one(&alg);
        let a = SraElement::x(&alg, 0)
            .mul(&SraElement::y(&alg, 1))
            .unwrap();
        assert_eq!(one.mul(&a).unwrap(), a);
        assert_eq!(a.mul(&one).unwrap(), a);
    }

    #[test]
    fn invariant_through_symmetrizer() {
        // e * (x1 + x2) * e = (x1 + x2) * e since x1 + x2 is W-invariant
        let alg = h_sn(2, 1);
        let e = SraElement::symmetrizer(&alg);
        let sx = SraElement::x(&alg, 0).add(&SraElement::x(&alg, 1)).unwrap();
        let lhs = e.mul(&sx).unwrap().mul(&e).unwrap();
        let rhs = sx.mul(&e).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn word_normal_form() {
        let alg = h_sn(2, 1);
        let w = normal_form(
            &alg,
            &[Gen::Y(0), Gen::X(0)],
        );
        let direct = SraElement::y(&alg, 0).mul(&SraElement::x(&alg, 0)).unwrap();
        assert_eq!(w, direct);
    }
}

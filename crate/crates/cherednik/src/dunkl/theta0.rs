//! The t = 0 homomorphism into group-algebra-valued rational functions on
//! the regular locus times the dual space.
//!
//! Functions live in the 2n variables (x_1..x_n, p_1..p_n); the group acts
//! on both blocks, and multiplication twists function factors past group
//! factors.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use super::operator::RootSystem;
use crate::error::{CherednikError, Result};
use crate::exact::multipoly::MultiPoly;
use crate::exact::ratfun::RatFun;
use crate::exact::scalar::{int, rat, Scalar};
use crate::groups::element::GroupElement;
use crate::groups::spec::GroupSpec;
use crate::sra::element::{Algebra, SraElement};

/// Element of the smash product of rational functions in (x, p) with the
/// group algebra.
#[derive(Clone, PartialEq)]
pub struct SmashPoly {
    pub spec: GroupSpec,
    terms: BTreeMap<GroupElement, RatFun>,
}

impl SmashPoly {
    pub fn zero(spec: &GroupSpec) -> Self {
        SmashPoly {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        2 * self.spec.num_xvars()
    }

    pub fn scalar(spec: &GroupSpec, f: RatFun) -> Self {
        let mut s = SmashPoly::zero(spec);
        s.add_term(spec.identity(), f);
        s
    }

    pub fn group(spec: &GroupSpec, g: GroupElement) -> Self {
        let nv = 2 * spec.num_xvars();
        let mut s = SmashPoly::zero(spec);
        s.add_term(g, RatFun::one(nv));
        s
    }

    pub fn add_term(&mut self, g: GroupElement, f: RatFun) {
        if f.is_zero() {
            return;
        }
        match self.terms.entry(g) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &RatFun)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &GroupElement) -> RatFun {
        self.terms
            .get(g)
            .cloned()
            .unwrap_or_else(|| RatFun::zero(self.nvars()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &SmashPoly) -> SmashPoly {
        let mut out = self.clone();
        for (g, f) in &rhs.terms {
            out.add_term(g.clone(), f.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &SmashPoly) -> SmashPoly {
        let mut out = self.clone();
        for (g, f) in &rhs.terms {
            out.add_term(g.clone(), -f);
        }
        out
    }

    /// Substitution action of `u` on a function of (x, p): both blocks
    /// transform by the corresponding blocks of the symplectic action.
    pub fn act(spec: &GroupSpec, u: &GroupElement, f: &RatFun) -> Result<RatFun> {
        let n = spec.num_xvars();
        let act = spec.action_matrix(u)?;
        let images: Vec<MultiPoly> = (0..2 * n)
            .map(|i| {
                let mut q = MultiPoly::zero(2 * n);
                for r in 0..2 * n {
                    let a = act[(r, i)].clone();
                    if !Zero::is_zero(&a) {
                        let mut e = vec![0; 2 * n];
                        e[r] = 1;
                        q.add_term(e, a);
                    }
                }
                q
            })
            .collect();
        f.substitute_linear(&images)
    }

    /// Smash multiplication: `(f u)(g v) = f (u . g) (u v)`.
    pub fn mul(&self, rhs: &SmashPoly) -> Result<SmashPoly> {
        if self.spec != rhs.spec {
            return Err(CherednikError::Structure(
                "smash elements over different groups".into(),
            ));
        }
        let mut out = SmashPoly::zero(&self.spec);
        for (u, f) in &self.terms {
            for (v, g) in &rhs.terms {
                let moved = SmashPoly::act(&self.spec, u, g)?;
                out.add_term(self.spec.mul(u, v), f * &moved);
            }
        }
        Ok(out)
    }

    fn add_term_ref(&mut self, g: GroupElement, f: &RatFun) {
        self.add_term(g, f.clone());
    }

    /// Sum of all coefficient functions: the multiplication operator the
    /// element induces on W-invariant functions (valid at t = 0 where the
    /// function part is commutative).
    pub fn collapse_on_invariants(&self) -> RatFun {
        let mut acc = RatFun::zero(self.nvars());
        for f in self.terms.values() {
            acc = &acc + f;
        }
        acc
    }
}

impl std::fmt::Debug for SmashPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(g, c)| format!("({c})*{g:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Image of a generator y under the t = 0 map:
/// `p_y + (1/2) sum_alpha c_alpha <alpha, y> / alpha * s_alpha`.
fn theta0_y(rs: &RootSystem, c: &crate::groups::kappa::ClassFunction, i: usize) -> Result<SmashPoly> {
    let spec = &rs.spec;
    let n = spec.num_xvars();
    let nv = 2 * n;
    let mut out = SmashPoly::zero(spec);
    out.add_term(spec.identity(), RatFun::var(nv, n + i));
    let half = rat(1, 2);
    for root in &rs.roots {
        let c_alpha = c.get(&root.class_id).ok_or_else(|| {
            CherednikError::Domain(format!("missing parameter on class {}", root.class_id))
        })?;
        let num = &root.alpha[i] * c_alpha;
        if Zero::is_zero(&num) {
            continue;
        }
        let mut alpha = MultiPoly::zero(nv);
        for (k, coef) in root.alpha.iter().enumerate() {
            let mut e = vec![0; nv];
            e[k] = 1;
            alpha.add_term(e, coef.clone());
        }
        let f = RatFun::new(MultiPoly::constant(nv, &half * &num), alpha)?;
        out.add_term_ref(root.reflection.clone(), &f);
    }
    Ok(out)
}

/// Image of a normal-form element of the t = 0 algebra.
pub fn theta0_image(elem: &SraElement) -> Result<SmashPoly> {
    let alg: &Arc<Algebra> = &elem.algebra;
    if !alg.is_t_zero() {
        return Err(CherednikError::Domain(
            "the t = 0 homomorphism needs a t = 0 algebra instance".into(),
        ));
    }
    let rs = RootSystem::new(&alg.spec)?;
    let spec = &alg.spec;
    let n = spec.num_xvars();
    let nv = 2 * n;
    let y_images: Vec<SmashPoly> = (0..n)
        .map(|i| theta0_y(&rs, &alg.c, i))
        .collect::<Result<_>>()?;
    let mut out = SmashPoly::zero(spec);
    for (m, coeff) in elem.terms() {
        let mut xpart = MultiPoly::one(nv);
        for (i, &d) in m.x.iter().enumerate() {
            let mut e = vec![0; nv];
            e[i] = d;
            xpart = &xpart * &MultiPoly::monomial(nv, e, int(1));
        }
        let mut acc = SmashPoly::scalar(spec, RatFun::from_poly(xpart));
        for (i, &d) in m.y.iter().enumerate() {
            for _ in 0..d {
                acc = acc.mul(&y_images[i])?;
            }
        }
        if !m.w.is_identity() {
            acc = acc.mul(&SmashPoly::group(spec, m.w.clone()))?;
        }
        let cval = coeff.coeff(0);
        let mut scaled = SmashPoly::zero(spec);
        for (g, f) in acc.terms() {
            scaled.add_term(g.clone(), f.scale(&cval));
        }
        out = out.add(&scaled);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::tpoly::TPoly;
    use crate::groups::kappa::ClassFunction;
    use rand::SeedableRng;

    fn h0(n: usize, c: Scalar) -> Arc<Algebra> {
        Algebra::symmetric(n, c, TPoly::zero()).unwrap()
    }

    #[test]
    fn coordinate_maps_to_coordinate() {
        let alg = h0(2, int(1));
        let img = theta0_image(&SraElement::x(&alg, 0)).unwrap();
        let expect = SmashPoly::scalar(&alg.spec, RatFun::var(4, 0));
        assert_eq!(img, expect);
    }

    #[test]
    fn momentum_image_for_rank_one() {
        // y_1 -> p_1 + c/(x_1 - x_2) s for the two-coordinate rank-one system
        let c = rat(2, 5);
        let alg = h0(2, c.clone());
        let img = theta0_image(&SraElement::y(&alg, 0)).unwrap();
        let s = crate::groups::element::GroupElement::transposition(2, 0, 1);
        let p1 = RatFun::var(4, 2);
        assert_eq!(img.coeff(&alg.spec.identity()), p1);
        let denом = {
            let x1 = MultiPoly::var(4, 0);
            let x2 = MultiPoly::var(4, 1);
            &x1 - &x2
        };
        let expect = RatFun::new(MultiPoly::constant(4, c), denом).unwrap();
        assert_eq!(img.coeff(&s), expect);
    }

    #[test]
    fn homomorphism_spot_check() {
        let alg = h0(2, rat(1, 2));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..4 {
            let a = crate::sra::ops::random_element(&alg, &mut rng, 2, 2);
            let b = crate::sra::ops::random_element(&alg, &mut rng, 2, 2);
            let lhs = theta0_image(&a.mul(&b).unwrap()).unwrap();
            let rhs = theta0_image(&a).unwrap().mul(&theta0_image(&b).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn spherical_hamiltonian() {
        // collapse of theta0(e |p|^2 e) = sum p_i^2 - c^2 sum_{i != j}
        // (x_i - x_j)^{-2}
        for n in [2usize, 3] {
            let c = rat(2, 3);
            let alg = h0(n, c.clone());
            let nv = 2 * n;
            let p2 = crate::sra::ops::phi(&alg, 2);
            let sph = crate::sra::ops::spherical(&p2);
            let img = theta0_image(&sph).unwrap();
            let got = img.collapse_on_invariants();
            let mut expect = RatFun::zero(nv);
            for i in 0..n {
                let mut e = vec![0; nv];
                e[n + i] = 2;
                expect = &expect + &RatFun::from_poly(MultiPoly::monomial(nv, e, int(1)));
            }
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let xi = MultiPoly::var(nv, i);
                    let xj = MultiPoly::var(nv, j);
                    let d = (&xi - &xj).pow(2);
                    let term =
                        RatFun::new(MultiPoly::constant(nv, -(&c * &c)), d).unwrap();
                    expect = &expect + &term;
                }
            }
            assert_eq!(got, expect, "hamiltonian mismatch at n = {n}");
        }
    }
}

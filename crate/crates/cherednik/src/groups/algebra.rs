//! Group-algebra elements with polynomial-in-t coefficients.

use std::collections::BTreeMap;
use std::fmt;

use super::element::GroupElement;
use super::spec::GroupSpec;
use crate::error::{CherednikError, Result};
use crate::exact::scalar::Scalar;
use crate::exact::tpoly::TPoly;

/// Element of the group algebra over Q[t].
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebra {
    pub spec: GroupSpec,
    terms: BTreeMap<GroupElement, TPoly>,
}

impl GroupAlgebra {
    pub fn zero(spec: &GroupSpec) -> Self {
        GroupAlgebra {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(spec: &GroupSpec) -> Self {
        GroupAlgebra::element(spec, spec.identity())
    }

    pub fn element(spec: &GroupSpec, g: GroupElement) -> Self {
        let mut a = GroupAlgebra::zero(spec);
        a.add_term(g, TPoly::one());
        a
    }

    pub fn scalar(spec: &GroupSpec, c: TPoly) -> Self {
        let mut a = GroupAlgebra::zero(spec);
        a.add_term(spec.identity(), c);
        a
    }

    /// The symmetrizer idempotent e = (1/|G|) sum_g g.
    pub fn symmetrizer(spec: &GroupSpec) -> Self {
        let order = Scalar::from_integer((spec.order() as i64).into());
        let w = TPoly::constant(Scalar::from_integer(1.into()) / order);
        let mut a = GroupAlgebra::zero(spec);
        for g in spec.elements() {
            a.add_term(g, w.clone());
        }
        a
    }

    /// The antisymmetrizer e_- = (1/|G|) sum_g sign(g) g (Coxeter families).
    pub fn antisymmetrizer(spec: &GroupSpec) -> Result<Self> {
        let order = Scalar::from_integer((spec.order() as i64).into());
        let mut a = GroupAlgebra::zero(spec);
        for g in spec.elements() {
            let s = spec.sign(&g)?;
            a.add_term(g, TPoly::constant(s / &order));
        }
        Ok(a)
    }

    pub fn add_term(&mut self, g: GroupElement, c: TPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &TPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &GroupElement) -> TPoly {
        self.terms.get(g).cloned().unwrap_or_else(TPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &GroupAlgebra) -> Result<GroupAlgebra> {
        self.check_spec(rhs)?;
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_term(g.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &GroupAlgebra) -> Result<GroupAlgebra> {
        self.check_spec(rhs)?;
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_term(g.clone(), -c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &TPoly) -> GroupAlgebra {
        let mut out = GroupAlgebra::zero(&self.spec);
        for (g, a) in &self.terms {
            out.add_term(g.clone(), a * c);
        }
        out
    }

    /// Bilinear extension of group multiplication.
    pub fn mul(&self, rhs: &GroupAlgebra) -> Result<GroupAlgebra> {
        self.check_spec(rhs)?;
        let mut out = GroupAlgebra::zero(&self.spec);
        for (g, a) in &self.terms {
            for (h, b) in &rhs.terms {
                out.add_term(self.spec.mul(g, h), a * b);
            }
        }
        Ok(out)
    }

    /// Conjugation g . self . g^{-1}.
    pub fn conjugate(&self, by: &GroupElement) -> GroupAlgebra {
        let mut out = GroupAlgebra::zero(&self.spec);
        for (g, a) in &self.terms {
            out.add_term(self.spec.conjugate(g, by), a.clone());
        }
        out
    }

    fn check_spec(&self, rhs: &GroupAlgebra) -> Result<()> {
        if self.spec != rhs.spec {
            return Err(CherednikError::Structure(format!(
                "group algebra elements over {} and {}",
                self.spec, rhs.spec
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for GroupAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::element::GroupElement;

    #[test]
    fn transposition_squares_to_one() {
        let spec = GroupSpec::symmetric(3);
        let s12 = GroupAlgebra::element(&spec, GroupElement::transposition(3, 0, 1));
        assert_eq!(s12.mul(&s12).unwrap(), GroupAlgebra::one(&spec));
    }

    #[test]
    fn symmetrizer_idempotent() {
        for spec in [GroupSpec::symmetric(3), GroupSpec::wreath(2, 2)] {
            let e = GroupAlgebra::symmetrizer(&spec);
            assert_eq!(e.mul(&e).unwrap(), e);
        }
    }

    #[test]
    fn antisymmetrizer_and_orthogonality() {
        for spec in [GroupSpec::symmetric(2), GroupSpec::symmetric(3), GroupSpec::dihedral(6)] {
            let e = GroupAlgebra::symmetrizer(&spec);
            let em = GroupAlgebra::antisymmetrizer(&spec).unwrap();
            assert_eq!(em.mul(&em).unwrap(), em);
            assert!(e.mul(&em).unwrap().is_zero());
        }
    }

    #[test]
    fn transpositions_compose_to_cycle() {
        let spec = GroupSpec::symmetric(3);
        let s12 = GroupAlgebra::element(&spec, GroupElement::transposition(3, 0, 1));
        let s23 = GroupAlgebra::element(&spec, GroupElement::transposition(3, 1, 2));
        let p = s12.mul(&s23).unwrap();
        // s12 s23 maps 3 -> 2 -> ... : a 3-cycle
        let terms: Vec<_> = p.terms().collect();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].0.cycle_type(), vec![3]);
    }

    #[test]
    fn mismatched_specs_error() {
        let a = GroupAlgebra::one(&GroupSpec::symmetric(2));
        let b = GroupAlgebra::one(&GroupSpec::symmetric(3));
        assert!(a.mul(&b).is_err());
    }
}

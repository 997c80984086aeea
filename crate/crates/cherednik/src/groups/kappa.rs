//! Reflection forms and the deformation pairing kappa.
//!
//! Conventions, fixed once for the whole crate:
//! * V has basis (x_1..x_N, y_1..y_N) with omega(x_i, y_j) = delta_ij;
//! * for a symplectic reflection s, `pr_s` is the projection onto
//!   Im(Id - s) along Ker(Id - s), and
//!   `omega_s = tau_s * omega(pr_s -, pr_s -)` with `tau_s = 2` for
//!   reflections with nontrivial permutation part (and all dihedral
//!   reflections), `tau_s = 1` for color-type reflections acting inside a
//!   single plane;
//! * `kappa(u, v) = -t * omega(u, v) * 1 + sum_s c_s * omega_s(u, v) * s`.
//!
//! The scale factors make the symmetric-group relations come out as
//! `[y_i, x_j] = c s_ij` and `[y_k, x_k] = t - c sum s_ik`, and make the
//! wreath commutator `[x_1, y_1]` carry the color terms with coefficient
//! exactly `c'_gamma`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::algebra::GroupAlgebra;
use super::element::GroupElement;
use super::spec::{GroupFamily, GroupSpec, ReflectionClass};
use crate::error::{CherednikError, Result};
use crate::exact::scalar::{int, parse_scalar, Scalar};
use crate::exact::tpoly::TPoly;
use crate::linalg::QMatrix;

/// Function on reflection conjugacy classes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFunction {
    pub values: BTreeMap<String, Scalar>,
}

impl Serialize for ClassFunction {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<&String, String> = self
            .values
            .iter()
            .map(|(k, v)| (k, crate::exact::scalar::format_scalar(v)))
            .collect();
        map.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for ClassFunction {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw: BTreeMap<String, String> = BTreeMap::deserialize(de)?;
        let mut values = BTreeMap::new();
        for (k, v) in raw {
            values.insert(
                k,
                parse_scalar(&v).map_err(|e| serde::de::Error::custom(e.to_string()))?,
            );
        }
        Ok(ClassFunction { values })
    }
}

impl ClassFunction {
    pub fn empty() -> Self {
        ClassFunction {
            values: BTreeMap::new(),
        }
    }

    /// The constant class function `c` on every reflection class of `spec`.
    pub fn constant(spec: &GroupSpec, c: Scalar) -> Result<Self> {
        let classes = spec.classify_reflections()?;
        Ok(ClassFunction {
            values: classes.into_iter().map(|cl| (cl.id, c.clone())).collect(),
        })
    }

    /// Wreath-product parameters `(k, c')`: `k` on the permutation-type
    /// class, `c'[j-1]` on the color class `Gj`.
    pub fn wreath_pair(spec: &GroupSpec, k: Scalar, cprime: &[Scalar]) -> Result<Self> {
        let GroupFamily::Wreath(l, n) = spec.family else {
            return Err(CherednikError::Domain("wreath_pair needs a wreath group".into()));
        };
        if cprime.len() + 1 != l as usize {
            return Err(CherednikError::Domain(format!(
                "expected {} color values, got {}",
                l - 1,
                cprime.len()
            )));
        }
        let mut values = BTreeMap::new();
        if n >= 2 {
            values.insert("S".to_string(), k);
        }
        for (j, c) in cprime.iter().enumerate() {
            values.insert(format!("G{}", j + 1), c.clone());
        }
        Ok(ClassFunction { values })
    }

    /// Dihedral parameters: `c1` on the class of s, `c2` on the class of rs
    /// (one class for odd m, where `c2` is ignored).
    pub fn dihedral_pair(spec: &GroupSpec, c1: Scalar, c2: Scalar) -> Result<Self> {
        let GroupFamily::Dihedral(m) = spec.family else {
            return Err(CherednikError::Domain("dihedral_pair needs a dihedral group".into()));
        };
        let mut values = BTreeMap::new();
        values.insert("C1".to_string(), c1);
        if m % 2 == 0 {
            values.insert("C2".to_string(), c2);
        }
        Ok(ClassFunction { values })
    }

    /// Parses a JSON object like `{"S": "1", "G1": "1/2"}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: BTreeMap<String, String> = serde_json::from_str(text)?;
        let mut values = BTreeMap::new();
        for (k, v) in raw {
            values.insert(k, parse_scalar(&v)?);
        }
        Ok(ClassFunction { values })
    }

    pub fn get(&self, class_id: &str) -> Option<&Scalar> {
        self.values.get(class_id)
    }
}

/// The pairing kappa, stored on all ordered pairs of basis vectors of V.
#[derive(Clone)]
pub struct KappaPairing {
    pub spec: GroupSpec,
    pub c: ClassFunction,
    pub t: TPoly,
    /// entries[u][v] = kappa(b_u, b_v) in the group algebra over Q[t].
    entries: Vec<Vec<GroupAlgebra>>,
}

/// Scale factor of `omega_s` for a reflection (see module docs).
fn tau(spec: &GroupSpec, s: &GroupElement) -> Scalar {
    match spec.family {
        GroupFamily::Symmetric(_) | GroupFamily::Dihedral(_) => int(2),
        GroupFamily::Wreath(_, _) => {
            if s.perm.iter().enumerate().all(|(i, &p)| i == p) {
                int(1)
            } else {
                int(2)
            }
        }
    }
}

/// Projection onto Im(Id - s) along Ker(Id - s).
fn reflection_projector(spec: &GroupSpec, s: &GroupElement) -> Result<QMatrix> {
    let a = spec.action_matrix(s)?;
    let n = a.nrows();
    let k = &QMatrix::identity(n) - &a;
    if k.rank() != 2 {
        return Err(CherednikError::Domain(
            "element is not a symplectic reflection".into(),
        ));
    }
    // image basis: pivot columns of k
    let (_, pivots) = k.rref();
    let mut cols: Vec<Vec<Scalar>> = pivots
        .iter()
        .map(|&j| (0..n).map(|i| k[(i, j)].clone()).collect())
        .collect();
    let im_dim = cols.len();
    debug_assert_eq!(im_dim, 2);
    let kernel = k.kernel();
    cols.extend(kernel);
    let p = QMatrix::from_fn(n, n, |i, j| cols[j][i].clone());
    let pinv = p.inverse()?;
    let mut e = QMatrix::zeros(n, n);
    for i in 0..im_dim {
        e[(i, i)] = int(1);
    }
    Ok(p.mul_mat(&e).mul_mat(&pinv))
}

/// The bilinear form omega_s as a matrix on V.
pub fn reflection_form(spec: &GroupSpec, s: &GroupElement) -> Result<QMatrix> {
    let pr = reflection_projector(spec, s)?;
    let om = spec.omega();
    let m = pr.transpose().mul_mat(&om).mul_mat(&pr);
    Ok(m.scale(&tau(spec, s)))
}

/// Builds the pairing kappa for the class function `c` and symbolic or
/// specialized `t`.
pub fn build_kappa(spec: &GroupSpec, c: &ClassFunction, t: &TPoly) -> Result<KappaPairing> {
    let classes: Vec<ReflectionClass> = spec.classify_reflections()?;
    for cl in &classes {
        if c.get(&cl.id).is_none() {
            return Err(CherednikError::Domain(format!(
                "class function missing a value on class {}",
                cl.id
            )));
        }
    }
    let dim = spec.symplectic_dim();
    let om = spec.omega();
    let mut entries = vec![vec![GroupAlgebra::zero(spec); dim]; dim];
    // -t * omega part
    for (u, row) in entries.iter_mut().enumerate() {
        for (v, entry) in row.iter_mut().enumerate() {
            let w = om[(u, v)].clone();
            if !num_traits::Zero::is_zero(&w) {
                entry.add_term(spec.identity(), (-t).scale(&w));
            }
        }
    }
    // reflection part
    for cl in &classes {
        let cs = c.get(&cl.id).expect("checked above").clone();
        if num_traits::Zero::is_zero(&cs) {
            continue;
        }
        for s in &cl.members {
            let form = reflection_form(spec, s)?;
            for (u, row) in entries.iter_mut().enumerate() {
                for (v, entry) in row.iter_mut().enumerate() {
                    let w = &form[(u, v)] * &cs;
                    if !num_traits::Zero::is_zero(&w) {
                        entry.add_term(s.clone(), TPoly::constant(w));
                    }
                }
            }
        }
    }
    Ok(KappaPairing {
        spec: spec.clone(),
        c: c.clone(),
        t: t.clone(),
        entries,
    })
}

impl KappaPairing {
    /// kappa on two basis vectors of V (indices into (x_1..x_N, y_1..y_N)).
    pub fn basis(&self, u: usize, v: usize) -> &GroupAlgebra {
        &self.entries[u][v]
    }

    /// Bilinear evaluation on coordinate vectors.
    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> GroupAlgebra {
        let mut out = GroupAlgebra::zero(&self.spec);
        for (i, a) in u.iter().enumerate() {
            if num_traits::Zero::is_zero(a) {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if num_traits::Zero::is_zero(b) {
                    continue;
                }
                let c = TPoly::constant(a * b);
                out = out
                    .add(&self.entries[i][j].scale(&c))
                    .expect("same spec");
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Replaces one single group element's coefficient in kappa(b_u, b_v)
    /// and kappa(b_v, b_u) (keeping antisymmetry); used by perturbation
    /// tests of the PBW criterion.
    pub fn perturb(&mut self, u: usize, v: usize, g: &GroupElement, delta: Scalar) {
        let d = TPoly::constant(delta);
        self.entries[u][v].add_term(g.clone(), d.clone());
        self.entries[v][u].add_term(g.clone(), -&d);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::rat;

    fn xy_indices(n: usize, i: usize) -> (usize, usize) {
        (i, n + i) // (x_i, y_i)
    }

    #[test]
    fn symmetric_relations_match() {
        // kappa(y_k, x_k) = t - sum_{i != k} s_ik and kappa(y_i, x_j) = s_ij
        let n = 3;
        let spec = GroupSpec::symmetric(n);
        let c = ClassFunction::constant(&spec, int(1)).unwrap();
        let kp = build_kappa(&spec, &c, &TPoly::t()).unwrap();
        let (x0, y0) = xy_indices(n, 0);
        let k = kp.basis(y0, x0);
        assert_eq!(k.coeff(&spec.identity()), TPoly::t());
        for i in 1..n {
            let s = GroupElement::transposition(n, 0, i);
            assert_eq!(k.coeff(&s), TPoly::constant(int(-1)));
        }
        // off-diagonal
        let (x1, _) = xy_indices(n, 1);
        let k01 = kp.basis(y0, x1);
        assert_eq!(
            k01.coeff(&GroupElement::transposition(n, 0, 1)),
            TPoly::constant(int(1))
        );
        assert_eq!(k01.coeff(&spec.identity()), TPoly::zero());
    }

    #[test]
    fn smash_product_degeneration() {
        // c = 0: kappa(y, x) = t * <y, x>
        let spec = GroupSpec::symmetric(2);
        let c = ClassFunction::constant(&spec, int(0)).unwrap();
        let kp = build_kappa(&spec, &c, &TPoly::t()).unwrap();
        let k = kp.basis(2, 0); // (y_1, x_1)
        assert_eq!(k.coeff(&spec.identity()), TPoly::t());
        assert!(kp.basis(0, 1).is_zero()); // kappa(x_1, x_2) = 0
    }

    #[test]
    fn gamma_form_is_omega_restricted() {
        // omega_{gamma_1}(x_1, y_1) = omega(x_1, y_1) = 1, and 0 on plane 2
        let spec = GroupSpec::wreath(2, 2);
        let g1 = GroupElement::color_gen(2, 0, 1, 2);
        let form = reflection_form(&spec, &g1).unwrap();
        assert_eq!(form[(0, 2)], int(1)); // (x_1, y_1)
        assert_eq!(form[(1, 3)], int(0)); // (x_2, y_2)
    }

    #[test]
    fn radical_annihilates() {
        // arguments in Ker(Id - s) pair to zero
        let spec = GroupSpec::symmetric(2);
        let s = GroupElement::transposition(2, 0, 1);
        let form = reflection_form(&spec, &s).unwrap();
        // x_1 + x_2 and y_1 + y_2 are fixed by s
        let u = [int(1), int(1), int(0), int(0)];
        let v = [int(0), int(0), int(1), int(1)];
        let mut val = int(0);
        for i in 0..4 {
            for j in 0..4 {
                val += &u[i] * &form[(i, j)] * &v[j];
            }
        }
        assert_eq!(val, int(0));
    }

    #[test]
    fn wreath_color_terms() {
        // kappa(x_1, y_1) contains + c'_gamma * gamma_1 for each color class
        let spec = GroupSpec::wreath(3, 2);
        let c = ClassFunction::wreath_pair(&spec, int(1), &[rat(1, 2), rat(1, 3)]).unwrap();
        let kp = build_kappa(&spec, &c, &TPoly::zero()).unwrap();
        let k = kp.basis(0, 2); // (x_1, y_1)
        assert_eq!(
            k.coeff(&GroupElement::color_gen(2, 0, 1, 3)),
            TPoly::constant(rat(1, 2))
        );
        assert_eq!(
            k.coeff(&GroupElement::color_gen(2, 0, 2, 3)),
            TPoly::constant(rat(1, 3))
        );
        // and no color term at the second site
        assert_eq!(
            k.coeff(&GroupElement::color_gen(2, 1, 1, 3)),
            TPoly::zero()
        );
    }

    #[test]
    fn antisymmetry_and_equivariance() {
        for (spec, c) in [
            (
                GroupSpec::symmetric(3),
                ClassFunction::constant(&GroupSpec::symmetric(3), rat(1, 2)).unwrap(),
            ),
            (
                GroupSpec::wreath(2, 2),
                ClassFunction::wreath_pair(&GroupSpec::wreath(2, 2), int(1), &[rat(-2, 3)])
                    .unwrap(),
            ),
            (
                GroupSpec::dihedral(6),
                ClassFunction::dihedral_pair(&GroupSpec::dihedral(6), int(1), rat(1, 2))
                    .unwrap(),
            ),
        ] {
            let kp = build_kappa(&spec, &c, &TPoly::t()).unwrap();
            let dim = kp.dim();
            // antisymmetry
            for u in 0..dim {
                for v in 0..dim {
                    let a = kp.basis(u, v);
                    let b = kp.basis(v, u);
                    assert!(a.add(&b).unwrap().is_zero());
                }
            }
            // equivariance on generators
            for (_, g) in spec.generators() {
                let m = spec.action_matrix(&g).unwrap();
                for u in 0..dim {
                    for v in 0..dim {
                        let gu: Vec<Scalar> = (0..dim).map(|r| m[(r, u)].clone()).collect();
                        let gv: Vec<Scalar> = (0..dim).map(|r| m[(r, v)].clone()).collect();
                        let lhs = kp.eval(&gu, &gv);
                        let rhs = kp.basis(u, v).conjugate(&g);
                        assert_eq!(
                            lhs.sub(&rhs).unwrap().is_zero(),
                            true,
                            "equivariance fails in {spec} at ({u},{v})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn missing_class_value_rejected() {
        let spec = GroupSpec::wreath(2, 2);
        let mut c = ClassFunction::empty();
        c.values.insert("S".into(), int(1));
        assert!(build_kappa(&spec, &c, &TPoly::t()).is_err());
    }
}

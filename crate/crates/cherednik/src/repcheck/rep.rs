//! Finite-dimensional modules over an algebra instance: action matrices
//! for the generators, with exact relation checking.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{CherednikError, Result};
use crate::exact::scalar::{int, Scalar};
use crate::exact::tpoly::TPoly;
use crate::groups::element::GroupElement;
use crate::groups::kappa::{build_kappa, ClassFunction};
use crate::groups::spec::{GroupFamily, GroupSpec};
use crate::linalg::{span_dim, QMatrix};

/// A candidate module: matrices for x_1..x_n, y_1..y_n and the group
/// generators, over the rationals.
#[derive(Clone)]
pub struct Representation {
    pub spec: GroupSpec,
    pub t: Scalar,
    pub c: ClassFunction,
    pub x_mats: Vec<QMatrix>,
    pub y_mats: Vec<QMatrix>,
    /// one matrix per entry of `spec.generators()`
    pub gen_mats: Vec<QMatrix>,
    pub dim: usize,
}

/// First failing relation, for diagnostics.
#[derive(Clone, Debug)]
pub enum RelationFailure {
    GroupPresentation(String),
    Equivariance { generator: String, vector: String },
    Commutation { left: String, right: String },
}

impl Representation {
    /// Matrix of an arbitrary group element via its generator word.
    pub fn group_matrix(&self, g: &GroupElement) -> QMatrix {
        let mut m = QMatrix::identity(self.dim);
        for idx in self.spec.element_word(g) {
            m = m.mul_mat(&self.gen_mats[idx]);
        }
        m
    }

    /// Matrix of a basis vector of V (x_i for i < n, else y_{i-n}).
    fn vector_matrix(&self, idx: usize) -> &QMatrix {
        let n = self.spec.num_xvars();
        if idx < n {
            &self.x_mats[idx]
        } else {
            &self.y_mats[idx - n]
        }
    }

    /// Checks every defining relation of the algebra exactly.
    ///
    /// Relations: the group presentation on the generator matrices, the
    /// equivariance w v w^{-1} = w(v), and the commutation relations
    /// [u, v] = kappa(u, v) evaluated through the group matrices.
    pub fn verify(&self) -> Result<std::result::Result<(), RelationFailure>> {
        if let Some(f) = self.check_group_presentation()? {
            return Ok(Err(f));
        }
        let n = self.spec.num_xvars();
        let dim_v = 2 * n;
        // equivariance
        let gens = self.spec.generators();
        for ((name, g), gm) in gens.iter().zip(&self.gen_mats) {
            let act = self.spec.action_matrix(g)?;
            let gi = gm.inverse().map_err(|_| {
                CherednikError::Domain(format!("generator {name} is not invertible"))
            })?;
            for v in 0..dim_v {
                let lhs = gm.mul_mat(self.vector_matrix(v)).mul_mat(&gi);
                let mut rhs = QMatrix::zeros(self.dim, self.dim);
                for r in 0..dim_v {
                    let a = act[(r, v)].clone();
                    if Zero::is_zero(&a) {
                        continue;
                    }
                    rhs = &rhs + &self.vector_matrix(r).scale(&a);
                }
                if lhs != rhs {
                    return Ok(Err(RelationFailure::Equivariance {
                        generator: name.clone(),
                        vector: vector_name(n, v),
                    }));
                }
            }
        }
        // commutation relations
        let tpoly = TPoly::constant(self.t.clone());
        let kappa = build_kappa(&self.spec, &self.c, &tpoly)?;
        for u in 0..dim_v {
            for v in (u + 1)..dim_v {
                let lhs = self
                    .vector_matrix(u)
                    .commutator(self.vector_matrix(v));
                let mut rhs = QMatrix::zeros(self.dim, self.dim);
                for (g, coeff) in kappa.basis(u, v).terms() {
                    let c = coeff.coeff(0);
                    if Zero::is_zero(&c) {
                        continue;
                    }
                    rhs = &rhs + &self.group_matrix(g).scale(&c);
                }
                if lhs != rhs {
                    return Ok(Err(RelationFailure::Commutation {
                        left: vector_name(n, u),
                        right: vector_name(n, v),
                    }));
                }
            }
        }
        Ok(Ok(()))
    }

    fn check_group_presentation(&self) -> Result<Option<RelationFailure>> {
        let id = QMatrix::identity(self.dim);
        let fail = |name: &str| Some(RelationFailure::GroupPresentation(name.to_string()));
        match self.spec.family {
            GroupFamily::Symmetric(n) | GroupFamily::Wreath(_, n) => {
                let sk = |i: usize| &self.gen_mats[i]; // s_{i+1}
                for i in 0..n.saturating_sub(1) {
                    if sk(i).mul_mat(sk(i)) != id {
                        return Ok(fail(&format!("s{}^2", i + 1)));
                    }
                    if i + 1 < n - 1 {
                        let a = sk(i).mul_mat(sk(i + 1)).mul_mat(sk(i));
                        let b = sk(i + 1).mul_mat(sk(i)).mul_mat(sk(i + 1));
                        if a != b {
                            return Ok(fail(&format!("braid s{} s{}", i + 1, i + 2)));
                        }
                    }
                    for j in (i + 2)..n.saturating_sub(1) {
                        if sk(i).mul_mat(sk(j)) != sk(j).mul_mat(sk(i)) {
                            return Ok(fail(&format!("s{} s{} commute", i + 1, j + 1)));
                        }
                    }
                }
                if let GroupFamily::Wreath(l, _) = self.spec.family {
                    if l > 1 {
                        let gam = &self.gen_mats[n - 1];
                        if gam.pow(l) != id {
                            return Ok(fail("gam^l"));
                        }
                        if n >= 2 {
                            // gam commutes with its conjugate at site 2
                            let g2 = sk(0).mul_mat(gam).mul_mat(sk(0));
                            if gam.mul_mat(&g2) != g2.mul_mat(gam) {
                                return Ok(fail("gam site commutation"));
                            }
                        }
                        for j in 1..n.saturating_sub(1) {
                            if gam.mul_mat(sk(j)) != sk(j).mul_mat(gam) {
                                return Ok(fail(&format!("gam s{}", j + 1)));
                            }
                        }
                    }
                }
            }
            GroupFamily::Dihedral(m) => {
                let r = &self.gen_mats[0];
                let s = &self.gen_mats[1];
                if r.pow(m) != id {
                    return Ok(fail("r^m"));
                }
                if s.mul_mat(s) != id {
                    return Ok(fail("s^2"));
                }
                let srs = s.mul_mat(r).mul_mat(s);
                if srs.mul_mat(r) != id {
                    return Ok(fail("s r s r"));
                }
            }
        }
        Ok(None)
    }

    /// Character: trace on one representative per conjugacy class.
    pub fn w_character(&self) -> Vec<(GroupElement, Scalar)> {
        self.spec
            .conjugacy_classes()
            .into_iter()
            .map(|cl| {
                let rep = cl[0].clone();
                let tr = self.group_matrix(&rep).trace();
                (rep, tr)
            })
            .collect()
    }

    /// True when the restriction to the group is a multiple of the regular
    /// representation: trace(1) = dim with |W| dividing dim, trace(g) = 0
    /// for g != 1.
    pub fn regular_test(&self) -> bool {
        if self.dim % self.spec.order() != 0 {
            return false;
        }
        for (g, tr) in self.w_character() {
            if g.is_identity() {
                if tr != int(self.dim as i64) {
                    return false;
                }
            } else if !Zero::is_zero(&tr) {
                return false;
            }
        }
        true
    }

    /// Burnside-style simplicity: products of generator matrices up to
    /// length 2*dim span the full matrix algebra.
    pub fn burnside_simplicity(&self) -> bool {
        let d = self.dim;
        let target = d * d;
        let mut gens: Vec<QMatrix> = Vec::new();
        gens.extend(self.x_mats.iter().cloned());
        gens.extend(self.y_mats.iter().cloned());
        gens.extend(self.gen_mats.iter().cloned());
        let mut basis: Vec<Vec<Scalar>> = vec![QMatrix::identity(d).flatten()];
        let mut frontier: Vec<QMatrix> = vec![QMatrix::identity(d)];
        let mut dim_span = span_dim(basis.clone());
        for _ in 0..2 * d {
            if dim_span == target {
                return true;
            }
            let mut next = Vec::new();
            for m in &frontier {
                for g in &gens {
                    let p = m.mul_mat(g);
                    basis.push(p.flatten());
                    next.push(p);
                }
            }
            let new_dim = span_dim(basis.clone());
            if new_dim == dim_span {
                break;
            }
            dim_span = new_dim;
            frontier = next;
        }
        dim_span == target
    }

    /// Dimension of the isotypic component of the n-dimensional permutation
    /// representation (trivial + reflection) inside the module.
    pub fn permutation_isotypic_dim(&self) -> Result<Scalar> {
        let classes = self.spec.conjugacy_classes();
        let mut acc = int(0);
        let mut total = 0usize;
        for cl in classes {
            let rep = &cl[0];
            let tr = self.group_matrix(rep).trace();
            // character of the permutation representation: fixed points of
            // the h-action
            let fix = self.spec.h_action(rep)?.trace();
            acc += fix * tr * int(cl.len() as i64);
            total += cl.len();
        }
        Ok(acc / int(total as i64))
    }

    /// Scalar by which a matrix acts if it is a scalar matrix.
    pub fn scalar_of(m: &QMatrix) -> Option<Scalar> {
        let d = m.nrows();
        let s = m[(0, 0)].clone();
        for i in 0..d {
            for j in 0..d {
                let expect = if i == j { s.clone() } else { int(0) };
                if m[(i, j)] != expect {
                    return None;
                }
            }
        }
        Some(s)
    }

    /// Invariant subspace under a subgroup generated by the given matrices,
    /// as an echelonized basis of column vectors.
    pub fn invariant_subspace(&self, gens: &[QMatrix]) -> Vec<Vec<Scalar>> {
        let d = self.dim;
        let mut rows = Vec::new();
        for g in gens {
            let diff = g - &QMatrix::identity(d);
            for i in 0..d {
                rows.push(diff.row(i).to_vec());
            }
        }
        if rows.is_empty() {
            return QMatrix::identity(d)
                .flatten()
                .chunks(d)
                .map(|r| r.to_vec())
                .collect();
        }
        let stacked = QMatrix::from_rows(rows);
        stacked.kernel()
    }
}

fn vector_name(n: usize, idx: usize) -> String {
    if idx < n {
        format!("x{}", idx + 1)
    } else {
        format!("y{}", idx + 1 - n)
    }
}

/// Builds the matrices of a group representation alone (x = y = 0 is not a
/// module unless t = 0 and c = 0; used for tests and characters).
pub fn group_only_representation(
    spec: &GroupSpec,
    c: ClassFunction,
    gen_mats: Vec<QMatrix>,
    dim: usize,
) -> Representation {
    let n = spec.num_xvars();
    Representation {
        spec: spec.clone(),
        t: int(0),
        c,
        x_mats: vec![QMatrix::zeros(dim, dim); n],
        y_mats: vec![QMatrix::zeros(dim, dim); n],
        gen_mats,
        dim,
    }
}

/// Regular representation matrices of the group generators.
pub fn regular_generator_matrices(spec: &GroupSpec) -> Vec<QMatrix> {
    let elements = spec.elements();
    let index: BTreeMap<GroupElement, usize> = elements
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, g)| (g, i))
        .collect();
    spec.generators()
        .into_iter()
        .map(|(_, g)| {
            let mut m = QMatrix::zeros(elements.len(), elements.len());
            for (j, h) in elements.iter().enumerate() {
                let gh = spec.mul(&g, h);
                m[(index[&gh], j)] = int(1);
            }
            m
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_module_of_h00() {
        // x_i, y_i -> 0 with permutation matrices is a module at t = c = 0
        let spec = GroupSpec::symmetric(3);
        let c = ClassFunction::constant(&spec, int(0)).unwrap();
        let gen_mats = regular_generator_matrices(&spec);
        let rep = group_only_representation(&spec, c, gen_mats, 6);
        assert!(rep.verify().unwrap().is_ok());
        assert!(rep.regular_test());
    }

    #[test]
    fn regular_test_rejects_nontrivial_character() {
        // the sign representation is 1-dimensional: not regular
        let spec = GroupSpec::symmetric(2);
        let c = ClassFunction::constant(&spec, int(0)).unwrap();
        let sign = QMatrix::from_rows(vec![vec![int(-1)]]);
        let rep = group_only_representation(&spec, c, vec![sign], 1);
        assert!(rep.verify().unwrap().is_ok());
        assert!(!rep.regular_test());
    }

    #[test]
    fn one_dimensional_trivial_module_is_simple() {
        let spec = GroupSpec::symmetric(2);
        let c = ClassFunction::constant(&spec, int(0)).unwrap();
        let one = QMatrix::identity(1);
        let rep = group_only_representation(&spec, c, vec![one], 1);
        assert!(rep.burnside_simplicity());
    }
}

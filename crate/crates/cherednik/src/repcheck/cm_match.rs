//! Extraction of a matrix-space point from a module: restrict x_1 and y_1
//! to the subspace of vectors fixed by the subgroup that keeps the first
//! index, and read off the pair of n x n matrices.

use super::rep::Representation;
use crate::cmspace::point::{rank_one_check, CmPoint};
use crate::error::{CherednikError, Result};
use crate::exact::scalar::Scalar;
use crate::groups::element::GroupElement;
use crate::groups::spec::GroupFamily;
use crate::linalg::QMatrix;

/// Restricts `x_1, y_1` to the invariants of the index-fixing subgroup and
/// returns the resulting pair with its rank-one certificate.
pub fn cm_match(rep: &Representation) -> Result<CmPoint> {
    let GroupFamily::Symmetric(n) = rep.spec.family else {
        return Err(CherednikError::Domain(
            "matrix-space extraction is defined for the symmetric family".into(),
        ));
    };
    if !rep.regular_test() {
        return Err(CherednikError::Domain(
            "the module must restrict to a multiple of the regular representation".into(),
        ));
    }
    // subgroup fixing index 0: generated by the adjacent transpositions on
    // the remaining indices (empty for n <= 2, where it is trivial)
    let sub_gens: Vec<QMatrix> = (1..n.saturating_sub(1))
        .map(|i| rep.group_matrix(&GroupElement::transposition(n, i, i + 1)))
        .collect();
    let basis = rep.invariant_subspace(&sub_gens);
    if basis.len() != n {
        return Err(CherednikError::Structure(format!(
            "invariant subspace has dimension {}, expected {}",
            basis.len(),
            n
        )));
    }
    let x = restrict(&rep.x_mats[0], &basis)?;
    let y = restrict(&rep.y_mats[0], &basis)?;
    let certificate = match rank_one_check(&x, &y) {
        Ok(c) => Some(c),
        Err(r) => {
            return Err(CherednikError::Domain(format!(
                "restricted pair violates the rank-one condition (rank {r})"
            )))
        }
    };
    Ok(CmPoint { x, y, certificate })
}

/// Expresses the action of `m` on the span of `basis` in that basis.
fn restrict(m: &QMatrix, basis: &[Vec<Scalar>]) -> Result<QMatrix> {
    let dim = basis.len();
    let amb = basis[0].len();
    let b = QMatrix::from_fn(amb, dim, |i, j| basis[j][i].clone());
    let mut out = QMatrix::zeros(dim, dim);
    for j in 0..dim {
        let img = m.mul_vec(&basis[j]);
        let coords = b.solve(&img).ok_or_else(|| {
            CherednikError::Structure("subspace is not stable under the action".into())
        })?;
        for i in 0..dim {
            out[(i, j)] = coords[i].clone();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmspace::point::wilson_map;
    use crate::dunkl::eval::evaluation_module;
    use crate::exact::scalar::int;
    use crate::groups::kappa::ClassFunction;
    use crate::groups::spec::GroupSpec;

    #[test]
    fn recovers_spectral_data() {
        for n in 2..=4usize {
            let spec = GroupSpec::symmetric(n);
            let c = ClassFunction::constant(&spec, int(1)).unwrap();
            let a: Vec<_> = (0..n).map(|i| int(i as i64)).collect();
            let b: Vec<_> = (0..n).map(|i| int((i * i + 1) as i64)).collect();
            let rep = evaluation_module(&spec, &a, &b, &c).unwrap();
            let p = cm_match(&rep).unwrap();
            assert_eq!(p.size(), n);
            let (a2, b2) = wilson_map(&p).unwrap();
            let mut expect: Vec<(Scalar, Scalar)> =
                a.iter().cloned().zip(b.iter().cloned()).collect();
            expect.sort();
            let got: Vec<(Scalar, Scalar)> = a2.into_iter().zip(b2).collect();
            assert_eq!(got, expect, "n = {n}");
        }
    }

    #[test]
    fn central_scalars_match_traces() {
        // the scalar of sum x_i^k on the module equals Tr(X^k) of the
        // extracted point
        let n = 3;
        let spec = GroupSpec::symmetric(n);
        let c = ClassFunction::constant(&spec, int(1)).unwrap();
        let a = [int(0), int(2), int(5)];
        let b = [int(1), int(-1), int(3)];
        let rep = evaluation_module(&spec, &a, &b, &c).unwrap();
        let p = cm_match(&rep).unwrap();
        for k in 0..=4u32 {
            let mut m = QMatrix::zeros(rep.dim, rep.dim);
            for i in 0..n {
                m = &m + &rep.x_mats[i].pow(k);
            }
            let scal = Representation::scalar_of(&m).expect("central element acts by scalar");
            assert_eq!(scal, p.invariant(k, 0));
        }
    }

    #[test]
    fn mutated_module_rejected() {
        let n = 3;
        let spec = GroupSpec::symmetric(n);
        let c = ClassFunction::constant(&spec, int(1)).unwrap();
        let a = [int(0), int(1), int(3)];
        let b = [int(2), int(4), int(8)];
        let mut rep = evaluation_module(&spec, &a, &b, &c).unwrap();
        // zero an off-diagonal entry of y_1: relations break
        let mut found = None;
        'outer: for i in 0..rep.dim {
            for j in 0..rep.dim {
                if i != j && !num_traits::Zero::is_zero(&rep.y_mats[0][(i, j)]) {
                    found = Some((i, j));
                    break 'outer;
                }
            }
        }
        let (i, j) = found.unwrap();
        rep.y_mats[0][(i, j)] = int(0);
        assert!(rep.verify().unwrap().is_err());
    }
}

//! The wreath commutator identity on the induced module: `[x_1, y_1]`
//! computed in the algebra acts on the module induced from the trivial
//! representation of the index-one-fixing subgroup as
//! `k |G| p (x) e_G + Id (x) c'`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cmspace::point::p_matrix;
use crate::error::{CherednikError, Result};
use crate::exact::scalar::{int, rat, Scalar};
use crate::exact::tpoly::TPoly;
use crate::groups::element::GroupElement;
use crate::groups::kappa::ClassFunction;
use crate::groups::spec::GroupSpec;
use crate::linalg::QMatrix;
use crate::sra::element::{Algebra, SraElement};

/// Coset invariant of a wreath element for the subgroup fixing index 0
/// with zero color there: the pair (perm^{-1}(0), color at that site).
fn coset_key(g: &GroupElement) -> (usize, u32) {
    let i = g.perm.iter().position(|&p| p == 0).expect("bijection");
    (i, g.colors[i])
}

/// Computes `[x_1, y_1]` in H_{0,(k,c')} of the wreath product, realizes
/// its action on the induced module in the basis indexed by (site, color),
/// and compares with `k |G| p (x) e_G + Id (x) c'` entrywise.
pub fn lemma_irreps1_check(l: u32, n: usize, k: &Scalar, cprime: &[Scalar]) -> Result<bool> {
    let spec = GroupSpec::wreath(l, n);
    let c = ClassFunction::wreath_pair(&spec, k.clone(), cprime)?;
    let alg = Algebra::new(spec.clone(), c, TPoly::zero())?;
    let com = SraElement::x(&alg, 0)
        .commutator(&SraElement::y(&alg, 0))?;
    let ga = com.to_group_algebra().ok_or_else(|| {
        CherednikError::Internal("[x1, y1] is not a pure group-algebra element".into())
    })?;

    // basis of the induced module inside the group algebra: sums over the
    // cosets keyed by (site, color)
    let elements = spec.elements();
    let lu = l as usize;
    let dim = n * lu;
    let key_index = |key: (usize, u32)| -> usize { key.0 * lu + key.1 as usize };
    // action of the commutator by left multiplication on each coset sum,
    // re-expressed in coset sums
    let mut action = QMatrix::zeros(dim, dim);
    for col_site in 0..n {
        for col_color in 0..lu {
            // coefficients of com * u_{(site,color)} on group elements
            let mut coeffs: BTreeMap<GroupElement, Scalar> = BTreeMap::new();
            for h in &elements {
                if coset_key(h) != (col_site, col_color as u32) {
                    continue;
                }
                for (g, cg) in ga.terms() {
                    let gh = spec.mul(g, h);
                    *coeffs.entry(gh).or_insert_with(|| int(0)) += cg.coeff(0);
                }
            }
            // group by coset and require constancy within each coset
            let mut per_coset: BTreeMap<(usize, u32), Vec<Scalar>> = BTreeMap::new();
            for h in &elements {
                per_coset
                    .entry(coset_key(h))
                    .or_default()
                    .push(coeffs.get(h).cloned().unwrap_or_else(|| int(0)));
            }
            for (key, vals) in per_coset {
                let first = vals[0].clone();
                if vals.iter().any(|v| *v != first) {
                    return Err(CherednikError::Internal(
                        "commutator action does not preserve the coset sums".into(),
                    ));
                }
                action[(key_index(key), key_index((col_site, col_color as u32)))] = first;
            }
        }
    }

    // expected matrix: k |G| p (x) e_G + Id (x) c'
    let p = p_matrix(n);
    let mut expect = QMatrix::zeros(dim, dim);
    let kg = k * &int((spec.order() / factorial(n)) as i64); // k * l^n / ...
    let _ = kg;
    let k_gamma = k * &int(l as i64); // k |Gamma|
    for i in 0..n {
        for j in 0..n {
            for a in 0..lu {
                for b in 0..lu {
                    // p (x) e_G with e_G all entries 1/l
                    expect[(i * lu + a, j * lu + b)] =
                        &expect[(i * lu + a, j * lu + b)]
                            + &(&(&p[(i, j)] * &k_gamma) * &rat(1, l as i64));
                }
            }
            if i == j {
                for (m, cm) in cprime.iter().enumerate() {
                    let shift = m + 1;
                    for b in 0..lu {
                        expect[(i * lu + (b + shift) % lu, j * lu + b)] =
                            &expect[(i * lu + (b + shift) % lu, j * lu + b)] + cm;
                    }
                }
            }
        }
    }
    Ok(action == expect)
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// The trivial-group specialization: `[x_1, y_1]` acts on the permutation
/// module as `k p`.
pub fn trivial_group_check(n: usize, k: &Scalar) -> Result<bool> {
    lemma_irreps1_check(1, n, k, &[])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wreath_two_two() {
        assert!(lemma_irreps1_check(2, 2, &int(1), &[rat(1, 2)]).unwrap());
    }

    #[test]
    fn zero_parameters_zero_commutator() {
        assert!(lemma_irreps1_check(2, 2, &int(0), &[int(0)]).unwrap());
        let alg = {
            let spec = GroupSpec::wreath(2, 2);
            let c = ClassFunction::wreath_pair(&spec, int(0), &[int(0)]).unwrap();
            Algebra::new(spec, c, TPoly::zero()).unwrap()
        };
        let com = SraElement::x(&alg, 0)
            .commutator(&SraElement::y(&alg, 0))
            .unwrap();
        assert!(com.is_zero());
    }

    #[test]
    fn trivial_group_three() {
        assert!(trivial_group_check(3, &rat(5, 7)).unwrap());
    }
}

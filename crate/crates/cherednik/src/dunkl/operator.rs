//! Root-system data and the Dunkl operator on polynomials.

use num_traits::Zero;

use crate::error::{CherednikError, Result};
use crate::exact::multipoly::MultiPoly;
use crate::exact::scalar::{int, Scalar};
use crate::groups::element::GroupElement;
use crate::groups::kappa::ClassFunction;
use crate::groups::spec::{GroupFamily, GroupSpec};

/// One root: the linear form on h, its reflection, and the class id used to
/// look up the parameter. Both alpha and -alpha are listed; the operator
/// `<alpha, y> / alpha` is insensitive to the scale of alpha.
#[derive(Clone, Debug)]
pub struct Root {
    /// coefficients of alpha in the x-basis of h*
    pub alpha: Vec<Scalar>,
    /// coroot in the y-basis of h (normalized so <alpha, coroot> = 2)
    pub coroot: Vec<Scalar>,
    pub reflection: GroupElement,
    pub class_id: String,
}

/// The full root system of a Coxeter family (symmetric or dihedral).
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub spec: GroupSpec,
    pub roots: Vec<Root>,
}

impl RootSystem {
    pub fn new(spec: &GroupSpec) -> Result<RootSystem> {
        match spec.family {
            GroupFamily::Symmetric(n) => {
                let mut roots = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        if i == j {
                            continue;
                        }
                        let mut alpha = vec![int(0); n];
                        alpha[i] = int(1);
                        alpha[j] = int(-1);
                        let coroot = alpha.clone();
                        roots.push(Root {
                            alpha,
                            coroot,
                            reflection: GroupElement::transposition(n, i, j),
                            class_id: "S".to_string(),
                        });
                    }
                }
                Ok(RootSystem {
                    spec: spec.clone(),
                    roots,
                })
            }
            GroupFamily::Dihedral(m) => {
                let mut roots = Vec::new();
                for cl in spec.classify_reflections()? {
                    for s in cl.members {
                        // alpha spans the -1 eigenspace of s on h*, i.e. the
                        // kernel of (h*-action + Id); the x-block of the
                        // action matrix is the h*-action.
                        let act = spec.action_matrix(&s)?;
                        let xblock = crate::linalg::QMatrix::from_fn(2, 2, |i, j| {
                            act[(i, j)].clone()
                        });
                        let plus =
                            &xblock + &crate::linalg::QMatrix::identity(2);
                        let ker = plus.kernel();
                        if ker.len() != 1 {
                            return Err(CherednikError::Internal(
                                "dihedral reflection without a root line".into(),
                            ));
                        }
                        let alpha = ker[0].clone();
                        // coroot: -1 eigenvector of the h-action, scaled so
                        // <alpha, coroot> = 2
                        let yblock = crate::linalg::QMatrix::from_fn(2, 2, |i, j| {
                            act[(2 + i, 2 + j)].clone()
                        });
                        let yplus = &yblock + &crate::linalg::QMatrix::identity(2);
                        let yker = yplus.kernel();
                        if yker.len() != 1 {
                            return Err(CherednikError::Internal(
                                "dihedral reflection without a coroot line".into(),
                            ));
                        }
                        let mut coroot = yker[0].clone();
                        let pairing: Scalar = alpha
                            .iter()
                            .zip(&coroot)
                            .map(|(a, b)| a * b)
                            .fold(int(0), |acc, v| acc + v);
                        if Zero::is_zero(&pairing) {
                            return Err(CherednikError::Internal(
                                "degenerate root/coroot pairing".into(),
                            ));
                        }
                        let scale = int(2) / pairing;
                        for c in coroot.iter_mut() {
                            *c = &*c * &scale;
                        }
                        for sign in [int(1), int(-1)] {
                            roots.push(Root {
                                alpha: alpha.iter().map(|a| a * &sign).collect(),
                                coroot: coroot.iter().map(|a| a * &sign).collect(),
                                reflection: s.clone(),
                                class_id: cl.id.clone(),
                            });
                        }
                    }
                }
                Ok(RootSystem {
                    spec: spec.clone(),
                    roots,
                })
            }
            GroupFamily::Wreath(1, n) => RootSystem::new(&GroupSpec::symmetric(n)),
            GroupFamily::Wreath(_, _) => Err(CherednikError::Unsupported(
                "Dunkl operators are implemented for Coxeter root systems".into(),
            )),
        }
    }

    pub fn nvars(&self) -> usize {
        self.spec.num_xvars()
    }

    /// alpha as a degree-one polynomial.
    pub fn alpha_poly(&self, r: &Root) -> MultiPoly {
        let n = self.nvars();
        let mut p = MultiPoly::zero(n);
        for (i, c) in r.alpha.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    /// A point `a` is regular when no root vanishes on it.
    pub fn is_regular(&self, a: &[Scalar]) -> bool {
        self.roots.iter().all(|r| {
            let v: Scalar = r
                .alpha
                .iter()
                .zip(a)
                .map(|(c, ai)| c * ai)
                .fold(int(0), |acc, x| acc + x);
            !Zero::is_zero(&v)
        })
    }
}

/// Action of a group element on a polynomial in the x-coordinates:
/// substitutes each variable by its image under the h*-action.
pub fn act_on_x_poly(spec: &GroupSpec, g: &GroupElement, p: &MultiPoly) -> Result<MultiPoly> {
    let n = spec.num_xvars();
    let act = spec.action_matrix(g)?;
    let images: Vec<MultiPoly> = (0..n)
        .map(|i| {
            let mut q = MultiPoly::zero(n);
            for r in 0..n {
                let a = act[(r, i)].clone();
                if !Zero::is_zero(&a) {
                    let mut e = vec![0; n];
                    e[r] = 1;
                    q.add_term(e, a);
                }
            }
            q
        })
        .collect();
    Ok(p.substitute_linear(&images))
}

/// The Dunkl operator `D_y = t d/dy + (1/2) sum_alpha c_alpha <alpha, y>
/// (s_alpha - 1) / alpha` applied to a polynomial in the x's. The divided
/// difference is an exact polynomial division.
pub fn dunkl_apply(
    rs: &RootSystem,
    y_dir: &[Scalar],
    p: &MultiPoly,
    t: &Scalar,
    c: &ClassFunction,
) -> Result<MultiPoly> {
    let n = rs.nvars();
    if y_dir.len() != n || p.nvars() != n {
        return Err(CherednikError::Structure(
            "direction/polynomial arity mismatch".into(),
        ));
    }
    // t * directional derivative
    let mut out = MultiPoly::zero(n);
    for (i, w) in y_dir.iter().enumerate() {
        if Zero::is_zero(w) {
            continue;
        }
        out = &out + &p.derivative(i).scale(&(t * w));
    }
    let half = crate::exact::scalar::rat(1, 2);
    for root in &rs.roots {
        let c_alpha = c.get(&root.class_id).ok_or_else(|| {
            CherednikError::Domain(format!("missing parameter on class {}", root.class_id))
        })?;
        if Zero::is_zero(c_alpha) {
            continue;
        }
        let pairing: Scalar = root
            .alpha
            .iter()
            .zip(y_dir)
            .map(|(a, b)| a * b)
            .fold(int(0), |acc, v| acc + v);
        if Zero::is_zero(&pairing) {
            continue;
        }
        let reflected = act_on_x_poly(&rs.spec, &root.reflection, p)?;
        let diff = &reflected - p;
        if diff.is_zero() {
            continue;
        }
        let quotient = diff.div_exact(&rs.alpha_poly(root)).map_err(|_| {
            CherednikError::Internal("divided difference is not exact".into())
        })?;
        out = &out + &quotient.scale(&(&half * &(&pairing * c_alpha)));
    }
    Ok(out)
}

/// Plain partial-derivative operator for the c = 0 cross-checks.
pub fn directional_derivative(p: &MultiPoly, y_dir: &[Scalar]) -> MultiPoly {
    let n = p.nvars();
    let mut out = MultiPoly::zero(n);
    for (i, w) in y_dir.iter().enumerate() {
        if !Zero::is_zero(w) {
            out = &out + &p.derivative(i).scale(w);
        }
    }
    out
}

fn basis_dir(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![int(0); n];
    v[i] = int(1);
    v
}

/// All monomials of total degree <= d in n variables.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<MultiPoly> {
    let mut exps: Vec<Vec<u32>> = Vec::new();
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(n, left - v, cur, out);
            cur.pop();
        }
    }
    rec(n, d, &mut Vec::new(), &mut exps);
    exps.into_iter()
        .map(|e| MultiPoly::monomial(n, e, int(1)))
        .collect()
}

/// `[D_{y_i}, D_{y_j}] P = 0` for all monomials P of total degree <= d.
/// Returns the first witness monomial on failure.
pub fn dunkl_commutator_check(
    rs: &RootSystem,
    d: u32,
    t: &Scalar,
    c: &ClassFunction,
) -> Result<std::result::Result<(), MultiPoly>> {
    let n = rs.nvars();
    for p in monomials_up_to(n, d) {
        for i in 0..n {
            for j in (i + 1)..n {
                let di = basis_dir(n, i);
                let dj = basis_dir(n, j);
                let a = dunkl_apply(rs, &di, &dunkl_apply(rs, &dj, &p, t, c)?, t, c)?;
                let b = dunkl_apply(rs, &dj, &dunkl_apply(rs, &di, &p, t, c)?, t, c)?;
                if a != b {
                    return Ok(Err(p));
                }
            }
        }
    }
    Ok(Ok(()))
}

/// A deliberately wrong operator: the scale factor is dropped on the first
/// root pair only, which destroys the class-invariance of the parameter.
/// (Dropping it on every root is just the reparametrization c -> 2c and
/// still commutes, so the mutation must be non-uniform to have teeth.)
pub fn dunkl_apply_mutated(
    rs: &RootSystem,
    y_dir: &[Scalar],
    p: &MultiPoly,
    t: &Scalar,
    c: &ClassFunction,
) -> Result<MultiPoly> {
    let mut out = dunkl_apply(rs, y_dir, p, t, c)?;
    // add the first root pair's contribution once more (factor 2 on it)
    let half = crate::exact::scalar::rat(1, 2);
    for root in rs.roots.iter().take(2) {
        let c_alpha = c.get(&root.class_id).ok_or_else(|| {
            CherednikError::Domain(format!("missing parameter on class {}", root.class_id))
        })?;
        let pairing: Scalar = root
            .alpha
            .iter()
            .zip(y_dir)
            .map(|(a, b)| a * b)
            .fold(int(0), |acc, v| acc + v);
        if Zero::is_zero(&pairing) {
            continue;
        }
        let reflected = act_on_x_poly(&rs.spec, &root.reflection, p)?;
        let diff = &reflected - p;
        if diff.is_zero() {
            continue;
        }
        let quotient = diff
            .div_exact(&rs.alpha_poly(root))
            .map_err(|_| CherednikError::Internal("divided difference is not exact".into()))?;
        out = &out + &quotient.scale(&(&half * &(&pairing * c_alpha)));
    }
    Ok(out)
}

/// Applies a normal-form algebra element through the Dunkl representation:
/// w acts by substitution, y by Dunkl operators, x by multiplication.
pub fn apply_via_dunkl(
    rs: &RootSystem,
    elem: &crate::sra::element::SraElement,
    p: &MultiPoly,
    c: &ClassFunction,
    t: &Scalar,
) -> Result<MultiPoly> {
    let n = rs.nvars();
    let mut out = MultiPoly::zero(n);
    for (m, coeff) in elem.terms() {
        let mut q = act_on_x_poly(&rs.spec, &m.w, p)?;
        for i in (0..n).rev() {
            for _ in 0..m.y[i] {
                q = dunkl_apply(rs, &basis_dir(n, i), &q, t, c)?;
            }
        }
        let xmono = MultiPoly::monomial(n, m.x.clone(), int(1));
        q = &q * &xmono;
        out = &out + &q.scale(&coeff.eval(t));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::rat;
    use crate::exact::tpoly::TPoly;
    use crate::sra::element::{Algebra, SraElement};
    use rand::SeedableRng;

    fn a1_system() -> RootSystem {
        RootSystem::new(&GroupSpec::symmetric(2)).unwrap()
    }

    #[test]
    fn first_coordinate_example() {
        // D_{y_1}(x_1) = 1 - c at t = 1 for the rank-one system in two
        // coordinates (both root signs contribute)
        let rs = a1_system();
        let c = ClassFunction::constant(&rs.spec, rat(1, 3)).unwrap();
        let p = MultiPoly::var(2, 0);
        let d = dunkl_apply(&rs, &[int(1), int(0)], &p, &int(1), &c).unwrap();
        let expect = MultiPoly::constant(2, int(1) - rat(1, 3));
        assert_eq!(d, expect);
    }

    #[test]
    fn zero_parameter_reduces_to_derivative() {
        let rs = RootSystem::new(&GroupSpec::symmetric(3)).unwrap();
        let c = ClassFunction::constant(&rs.spec, int(0)).unwrap();
        let p = {
            let x = MultiPoly::var(3, 0);
            let y = MultiPoly::var(3, 1);
            &x.pow(3) + &(&x * &y)
        };
        let t = rat(5, 7);
        let d = dunkl_apply(&rs, &[int(1), int(0), int(0)], &p, &t, &c).unwrap();
        assert_eq!(d, directional_derivative(&p, &[int(1), int(0), int(0)]).scale(&t));
    }

    #[test]
    fn constants_annihilated() {
        let rs = a1_system();
        let c = ClassFunction::constant(&rs.spec, int(2)).unwrap();
        let one = MultiPoly::one(2);
        assert!(dunkl_apply(&rs, &[int(1), int(0)], &one, &int(1), &c)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn commutators_vanish() {
        let rs = RootSystem::new(&GroupSpec::symmetric(3)).unwrap();
        for cval in [rat(1, 2), int(3)] {
            let c = ClassFunction::constant(&rs.spec, cval).unwrap();
            assert!(dunkl_commutator_check(&rs, 4, &int(1), &c)
                .unwrap()
                .is_ok());
        }
    }

    #[test]
    fn dihedral_commutators_vanish() {
        let rs = RootSystem::new(&GroupSpec::dihedral(4)).unwrap();
        let c = ClassFunction::dihedral_pair(&rs.spec, rat(1, 2), int(1)).unwrap();
        assert!(dunkl_commutator_check(&rs, 4, &int(1), &c).unwrap().is_ok());
    }

    #[test]
    fn mutated_operator_fails() {
        let rs = RootSystem::new(&GroupSpec::symmetric(3)).unwrap();
        let c = ClassFunction::constant(&rs.spec, int(1)).unwrap();
        let n = 3;
        let mut found = false;
        'outer: for p in monomials_up_to(n, 3) {
            for i in 0..n {
                for j in (i + 1)..n {
                    let di = basis_dir(n, i);
                    let dj = basis_dir(n, j);
                    let a = dunkl_apply_mutated(
                        &rs,
                        &di,
                        &dunkl_apply_mutated(&rs, &dj, &p, &int(1), &c).unwrap(),
                        &int(1),
                        &c,
                    )
                    .unwrap();
                    let b = dunkl_apply_mutated(
                        &rs,
                        &dj,
                        &dunkl_apply_mutated(&rs, &di, &p, &int(1), &c).unwrap(),
                        &int(1),
                        &c,
                    )
                    .unwrap();
                    if a != b {
                        found = true;
                        break 'outer;
                    }
                }
            }
        }
        assert!(found, "a per-root scale mutation must break commutativity");
    }

    #[test]
    fn representation_property() {
        // applying a product equals composing applications
        let alg = Algebra::symmetric(2, rat(1, 2), TPoly::t()).unwrap();
        let rs = a1_system();
        let c = alg.c.clone();
        let t = int(1);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..4 {
            let a = crate::sra::ops::random_element(&alg, &mut rng, 2, 2);
            let b = crate::sra::ops::random_element(&alg, &mut rng, 2, 2);
            let ab = a.mul(&b).unwrap();
            for p in monomials_up_to(2, 3) {
                let via_product = apply_via_dunkl(&rs, &ab, &p, &c, &t).unwrap();
                let chained =
                    apply_via_dunkl(&rs, &a, &apply_via_dunkl(&rs, &b, &p, &c, &t).unwrap(), &c, &t)
                        .unwrap();
                assert_eq!(via_product, chained);
            }
        }
        let _ = SraElement::one(&alg);
    }
}

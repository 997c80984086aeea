//! Operations on the symplectic reflection algebra: the PBW/Jacobi
//! criterion, partial Poisson brackets, centrality, endomorphism and
//! derivation actions, power sums and trigonometric elements.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;

use super::element::{normal_form, Algebra, Gen, PbwMonomial, SraElement};
use crate::error::{CherednikError, Result};
use crate::exact::multipoly::MultiPoly;
use crate::exact::scalar::{int, Scalar};
use crate::exact::tpoly::TPoly;
use crate::groups::element::GroupElement;
use crate::groups::kappa::KappaPairing;

/// Outcome of the PBW (Jacobi) criterion.
#[derive(Clone, Debug)]
pub struct JacobiReport {
    pub pass: bool,
    /// On failure: basis indices (u, v, z) and the group element where the
    /// two sides of the identity differ.
    pub witness: Option<(usize, usize, usize, GroupElement)>,
}

/// Checks `[z, kappa(u, v)] = [kappa(z, u), v] + [u, kappa(z, v)]` for all
/// triples of basis vectors of V, inside the tensor algebra smashed with
/// the group. Elements of the form sum_g (vector) * g are compared directly.
pub fn jacobi_check(kappa: &KappaPairing) -> Result<JacobiReport> {
    let spec = &kappa.spec;
    let dim = kappa.dim();
    let mut actions: BTreeMap<GroupElement, crate::linalg::QMatrix> = BTreeMap::new();
    for g in spec.elements() {
        actions.insert(g.clone(), spec.action_matrix(&g)?);
    }
    let basis = |idx: usize| -> Vec<Scalar> {
        let mut v = vec![int(0); dim];
        v[idx] = int(1);
        v
    };
    let accum = |g: &GroupElement,
                 vecpart: Vec<Scalar>,
                 c: &TPoly,
                 sign: i64,
                 diff: &mut BTreeMap<GroupElement, Vec<TPoly>>| {
        let entry = diff
            .entry(g.clone())
            .or_insert_with(|| vec![TPoly::zero(); dim]);
        for (slot, coeff) in entry.iter_mut().zip(&vecpart) {
            let add = c.scale(&(coeff * &int(sign)));
            *slot = &*slot + &add;
        }
    };
    for u in 0..dim {
        for v in 0..dim {
            for z in 0..dim {
                let mut diff: BTreeMap<GroupElement, Vec<TPoly>> = BTreeMap::new();
                // [z, kappa(u,v)] = sum_g b_g(u,v) (e_z - g e_z) g
                for (g, c) in kappa.basis(u, v).terms() {
                    let a = &actions[g];
                    let ez = basis(z);
                    let gz = a.mul_vec(&ez);
                    accum(g, ez, c, 1, &mut diff);
                    accum(g, gz, c, -1, &mut diff);
                }
                // -[kappa(z,u), v] = -sum_g b_g(z,u) (g e_v - e_v) g
                for (g, c) in kappa.basis(z, u).terms() {
                    let a = &actions[g];
                    let ev = basis(v);
                    let gv = a.mul_vec(&ev);
                    accum(g, gv, c, -1, &mut diff);
                    accum(g, ev, c, 1, &mut diff);
                }
                // -[u, kappa(z,v)] = -sum_g b_g(z,v) (e_u - g e_u) g
                for (g, c) in kappa.basis(z, v).terms() {
                    let a = &actions[g];
                    let eu = basis(u);
                    let gu = a.mul_vec(&eu);
                    accum(g, eu, c, -1, &mut diff);
                    accum(g, gu, c, 1, &mut diff);
                }
                for (g, vecs) in &diff {
                    if vecs.iter().any(|c| !c.is_zero()) {
                        return Ok(JacobiReport {
                            pass: false,
                            witness: Some((u, v, z, g.clone())),
                        });
                    }
                }
            }
        }
    }
    Ok(JacobiReport {
        pass: true,
        witness: None,
    })
}

/// Builds an element from a polynomial in the x (position) variables.
pub fn from_x_poly(alg: &Arc<Algebra>, p: &MultiPoly) -> SraElement {
    let n = alg.nvars();
    assert_eq!(p.nvars(), n);
    let mut out = SraElement::zero(alg);
    for (e, c) in p.terms() {
        out.add_term(
            PbwMonomial {
                x: e.clone(),
                y: vec![0; n],
                w: alg.spec.identity(),
            },
            TPoly::constant(c.clone()),
        );
    }
    out
}

/// Builds an element from a polynomial in the y (momentum) variables.
pub fn from_y_poly(alg: &Arc<Algebra>, p: &MultiPoly) -> SraElement {
    let n = alg.nvars();
    assert_eq!(p.nvars(), n);
    let mut out = SraElement::zero(alg);
    for (e, c) in p.terms() {
        out.add_term(
            PbwMonomial {
                x: vec![0; n],
                y: e.clone(),
                w: alg.spec.identity(),
            },
            TPoly::constant(c.clone()),
        );
    }
    out
}

/// Power sum in the x variables: `sum_i x_i^k`.
pub fn psi(alg: &Arc<Algebra>, k: u32) -> SraElement {
    let n = alg.nvars();
    let mut out = SraElement::zero(alg);
    for i in 0..n {
        let mut x = vec![0; n];
        x[i] = k;
        out.add_term(
            PbwMonomial {
                x,
                y: vec![0; n],
                w: alg.spec.identity(),
            },
            TPoly::one(),
        );
    }
    out
}

/// Power sum in the y variables: `sum_i y_i^l`.
pub fn phi(alg: &Arc<Algebra>, l: u32) -> SraElement {
    let n = alg.nvars();
    let mut out = SraElement::zero(alg);
    for i in 0..n {
        let mut y = vec![0; n];
        y[i] = l;
        out.add_term(
            PbwMonomial {
                x: vec![0; n],
                y,
                w: alg.spec.identity(),
            },
            TPoly::one(),
        );
    }
    out
}

fn is_pure_x(e: &SraElement) -> bool {
    e.terms()
        .all(|(m, _)| m.y.iter().all(|&d| d == 0) && m.w.is_identity())
}

fn is_pure_y(e: &SraElement) -> bool {
    e.terms()
        .all(|(m, _)| m.x.iter().all(|&d| d == 0) && m.w.is_identity())
}

fn is_w_invariant(e: &SraElement) -> Result<bool> {
    for (_, g) in e.algebra.spec.generators() {
        let ge = SraElement::group(&e.algebra, g);
        if !e.commutator(&ge)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The partial bracket `{z, u}`: the t-linear term of `[z, u]` computed
/// with symbolic t, requiring the t-constant term to vanish.
///
/// `z` must be a W-invariant polynomial purely in the x's or purely in the
/// y's; no bracket on the full center is defined, so other central first
/// arguments are rejected. The result lives in the t = 0 specialization of
/// the same algebra.
pub fn partial_bracket(z: &SraElement, u: &SraElement) -> Result<SraElement> {
    if !z.algebra.has_symbolic_t() {
        return Err(CherednikError::Domain(
            "partial bracket needs the symbolic-t algebra".into(),
        ));
    }
    if !(is_pure_x(z) || is_pure_y(z)) {
        return Err(CherednikError::Domain(
            "partial bracket is defined for polynomials purely in x or purely in y".into(),
        ));
    }
    if !is_w_invariant(z)? {
        return Err(CherednikError::Domain(
            "partial bracket needs a W-invariant first argument".into(),
        ));
    }
    let com = z.commutator(u)?;
    for (m, c) in com.terms() {
        if !Zero::is_zero(&c.coeff(0)) {
            return Err(CherednikError::Domain(format!(
                "first argument is not central at t = 0 (t^0 term at {m:?})"
            )));
        }
    }
    let t0 = at_t_zero(&z.algebra)?;
    let mut out = SraElement::zero(&t0);
    for (m, c) in com.terms() {
        out.add_term(m.clone(), TPoly::constant(c.coeff(1)));
    }
    Ok(out)
}

/// The same algebra with t specialized to 0.
pub fn at_t_zero(alg: &Arc<Algebra>) -> Result<Arc<Algebra>> {
    Algebra::new(alg.spec.clone(), alg.c.clone(), TPoly::zero())
}

/// Whether `z` is central: commutes with every generator. Requires t = 0.
pub fn centrality_check(z: &SraElement) -> Result<bool> {
    if !z.algebra.is_t_zero() {
        return Err(CherednikError::Domain(
            "centrality check is for the t = 0 algebra".into(),
        ));
    }
    let alg = &z.algebra;
    let n = alg.nvars();
    for i in 0..n {
        if !z.commutator(&SraElement::x(alg, i))?.is_zero() {
            return Ok(false);
        }
        if !z.commutator(&SraElement::y(alg, i))?.is_zero() {
            return Ok(false);
        }
    }
    for (_, g) in alg.spec.generators() {
        if !z.commutator(&SraElement::group(alg, g))?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Generator images of an algebra endomorphism fixing the group.
#[derive(Clone)]
pub struct EndoSpec {
    pub x_images: Vec<SraElement>,
    pub y_images: Vec<SraElement>,
}

impl EndoSpec {
    /// `a_f` for a polynomial f in the x's: `y_i -> y_i - df/dx_i`,
    /// everything else fixed.
    pub fn translation_by_x_poly(alg: &Arc<Algebra>, f: &MultiPoly) -> EndoSpec {
        let n = alg.nvars();
        let x_images = (0..n).map(|i| SraElement::x(alg, i)).collect();
        let y_images = (0..n)
            .map(|i| {
                let df = from_x_poly(alg, &f.derivative(i));
                SraElement::y(alg, i).sub(&df).expect("same algebra")
            })
            .collect();
        EndoSpec { x_images, y_images }
    }

    /// Fourier transform for the symmetric family: `x_i -> y_i, y_i -> -x_i`.
    pub fn fourier(alg: &Arc<Algebra>) -> Result<EndoSpec> {
        if !matches!(
            alg.spec.family,
            crate::groups::spec::GroupFamily::Symmetric(_)
        ) {
            return Err(CherednikError::Unsupported(
                "Fourier transform implemented for the symmetric family".into(),
            ));
        }
        let n = alg.nvars();
        Ok(EndoSpec {
            x_images: (0..n).map(|i| SraElement::y(alg, i)).collect(),
            y_images: (0..n)
                .map(|i| SraElement::x(alg, i).scale(&TPoly::constant(int(-1))))
                .collect(),
        })
    }

    /// SL2 action on each (x_i, y_i) pair: `x -> a x + b y, y -> c x + d y`
    /// with ad - bc = 1 (symmetric family).
    pub fn sl2(
        alg: &Arc<Algebra>,
        a: Scalar,
        b: Scalar,
        c: Scalar,
        d: Scalar,
    ) -> Result<EndoSpec> {
        if &a * &d - &b * &c != int(1) {
            return Err(CherednikError::Domain(
                "sl2 matrix needs determinant 1".into(),
            ));
        }
        let n = alg.nvars();
        let mk = |p: &Scalar, q: &Scalar, i: usize| {
            SraElement::x(alg, i)
                .scale(&TPoly::constant(p.clone()))
                .add(&SraElement::y(alg, i).scale(&TPoly::constant(q.clone())))
                .expect("same algebra")
        };
        Ok(EndoSpec {
            x_images: (0..n).map(|i| mk(&a, &b, i)).collect(),
            y_images: (0..n).map(|i| mk(&c, &d, i)).collect(),
        })
    }

    /// `b_{tau,l}`: `y_i -> y_i + tau x_i^l`, x fixed.
    pub fn b_shear(alg: &Arc<Algebra>, tau: Scalar, l: u32) -> EndoSpec {
        let n = alg.nvars();
        EndoSpec {
            x_images: (0..n).map(|i| SraElement::x(alg, i)).collect(),
            y_images: (0..n)
                .map(|i| {
                    let mut x = vec![0; n];
                    x[i] = l;
                    let mut xl = SraElement::zero(alg);
                    xl.add_term(
                        PbwMonomial {
                            x,
                            y: vec![0; n],
                            w: alg.spec.identity(),
                        },
                        TPoly::constant(tau.clone()),
                    );
                    SraElement::y(alg, i).add(&xl).expect("same algebra")
                })
                .collect(),
        }
    }

    /// `a_{tau,l}`: `x_i -> x_i + tau y_i^l`, y fixed.
    pub fn a_shear(alg: &Arc<Algebra>, tau: Scalar, l: u32) -> EndoSpec {
        let n = alg.nvars();
        EndoSpec {
            x_images: (0..n)
                .map(|i| {
                    let mut y = vec![0; n];
                    y[i] = l;
                    let mut yl = SraElement::zero(alg);
                    yl.add_term(
                        PbwMonomial {
                            x: vec![0; n],
                            y,
                            w: alg.spec.identity(),
                        },
                        TPoly::constant(tau.clone()),
                    );
                    SraElement::x(alg, i).add(&yl).expect("same algebra")
                })
                .collect(),
            y_images: (0..n).map(|i| SraElement::y(alg, i)).collect(),
        }
    }

    fn image_of_vector(&self, alg: &Arc<Algebra>, idx: usize) -> SraElement {
        let n = alg.nvars();
        if idx < n {
            self.x_images[idx].clone()
        } else {
            self.y_images[idx - n].clone()
        }
    }
}

/// Applies the endomorphism to an element (the group acts by itself).
pub fn apply_endomorphism(phi: &EndoSpec, a: &SraElement) -> Result<SraElement> {
    let alg = &a.algebra;
    let mut out = SraElement::zero(alg);
    for (m, c) in a.terms() {
        let mut acc = SraElement::scalar(alg, c.clone());
        for (i, &d) in m.x.iter().enumerate() {
            for _ in 0..d {
                acc = acc.mul(&phi.x_images[i])?;
            }
        }
        for (i, &d) in m.y.iter().enumerate() {
            for _ in 0..d {
                acc = acc.mul(&phi.y_images[i])?;
            }
        }
        if !m.w.is_identity() {
            acc = acc.mul_gen(&Gen::W(m.w.clone()));
        }
        out = out.add(&acc)?;
    }
    Ok(out)
}

/// Verifies that the generator images preserve every defining relation.
pub fn check_homomorphism(alg: &Arc<Algebra>, phi: &EndoSpec) -> Result<bool> {
    let dim = alg.spec.symplectic_dim();
    // commutation relations [phi(u), phi(v)] = phi(kappa(u, v)) = kappa(u, v)
    for u in 0..dim {
        for v in 0..dim {
            let pu = phi.image_of_vector(alg, u);
            let pv = phi.image_of_vector(alg, v);
            let lhs = pu.commutator(&pv)?;
            let mut rhs = SraElement::zero(alg);
            for (g, c) in alg.kappa().basis(u, v).terms() {
                rhs = rhs.add(&SraElement::group(alg, g.clone()).scale(c))?;
            }
            if !lhs.sub(&rhs)?.is_zero() {
                return Ok(false);
            }
        }
    }
    // equivariance relations w phi(u) w^{-1} = phi(w(u))
    for (_, g) in alg.spec.generators() {
        let act = alg.action(&g).clone();
        let ge = SraElement::group(alg, g.clone());
        let gi = SraElement::group(alg, alg.spec.inv(&g));
        for u in 0..dim {
            let lhs = ge.mul(&phi.image_of_vector(alg, u))?.mul(&gi)?;
            let mut rhs = SraElement::zero(alg);
            for r in 0..dim {
                let a = act[(r, u)].clone();
                if Zero::is_zero(&a) {
                    continue;
                }
                rhs = rhs.add(&phi.image_of_vector(alg, r).scale(&TPoly::constant(a)))?;
            }
            if !lhs.sub(&rhs)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Generator images of a W-linear derivation (group generators map to 0).
#[derive(Clone)]
pub struct DerSpec {
    pub x_images: Vec<SraElement>,
    pub y_images: Vec<SraElement>,
}

impl DerSpec {
    /// `theta_f` for f in the x's: `y_i -> -df/dx_i`, x and W to zero.
    pub fn theta_x_poly(alg: &Arc<Algebra>, f: &MultiPoly) -> DerSpec {
        let n = alg.nvars();
        DerSpec {
            x_images: (0..n).map(|_| SraElement::zero(alg)).collect(),
            y_images: (0..n)
                .map(|i| from_x_poly(alg, &f.derivative(i)).scale(&TPoly::constant(int(-1))))
                .collect(),
        }
    }
}

/// Applies a derivation by the Leibniz rule over each PBW word.
pub fn apply_derivation(d: &DerSpec, a: &SraElement) -> Result<SraElement> {
    let alg = &a.algebra;
    let mut out = SraElement::zero(alg);
    for (m, c) in a.terms() {
        let mut word: Vec<Gen> = Vec::new();
        for (i, &deg) in m.x.iter().enumerate() {
            for _ in 0..deg {
                word.push(Gen::X(i));
            }
        }
        for (i, &deg) in m.y.iter().enumerate() {
            for _ in 0..deg {
                word.push(Gen::Y(i));
            }
        }
        for (k, gen) in word.iter().enumerate() {
            let image = match gen {
                Gen::X(i) => &d.x_images[*i],
                Gen::Y(i) => &d.y_images[*i],
                Gen::W(_) => unreachable!(),
            };
            if image.is_zero() {
                continue;
            }
            let prefix = normal_form(alg, &word[..k]);
            let mut piece = prefix.mul(image)?;
            for g in &word[k + 1..] {
                piece = piece.mul_gen(g);
            }
            // the derivation kills the trailing group element, which then
            // just multiplies the surviving pieces
            if !m.w.is_identity() {
                piece = piece.mul_gen(&Gen::W(m.w.clone()));
            }
            out = out.add(&piece.scale(c))?;
        }
    }
    Ok(out)
}

/// The elements `z_i = x_i y_i - sum_{j<i} s_ij` of the symmetric family.
pub fn trig_elements(alg: &Arc<Algebra>) -> Result<Vec<SraElement>> {
    if !matches!(
        alg.spec.family,
        crate::groups::spec::GroupFamily::Symmetric(_)
    ) {
        return Err(CherednikError::Domain(
            "trigonometric elements are defined for the symmetric family".into(),
        ));
    }
    let n = alg.nvars();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut z = SraElement::x(alg, i).mul(&SraElement::y(alg, i))?;
        for j in 0..i {
            let s = SraElement::group(alg, GroupElement::transposition(n, j, i));
            z = z.sub(&s)?;
        }
        out.push(z);
    }
    Ok(out)
}

/// Pairwise commutativity of `a x_i + b y_i + c z_i`.
pub fn commuting_family_check(
    alg: &Arc<Algebra>,
    a: &Scalar,
    b: &Scalar,
    c: &Scalar,
) -> Result<bool> {
    let z = trig_elements(alg)?;
    let n = alg.nvars();
    let mut us = Vec::with_capacity(n);
    for (i, zi) in z.iter().enumerate() {
        let u = SraElement::x(alg, i)
            .scale(&TPoly::constant(a.clone()))
            .add(&SraElement::y(alg, i).scale(&TPoly::constant(b.clone())))?
            .add(&zi.scale(&TPoly::constant(c.clone())))?;
        us.push(u);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if !us[i].commutator(&us[j])?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Spherical element e u e.
pub fn spherical(u: &SraElement) -> SraElement {
    let e = SraElement::symmetrizer(&u.algebra);
    e.mul(u)
        .expect("same algebra")
        .mul(&e)
        .expect("same algebra")
}

/// Number of PBW monomials of filtration degree <= d: direct enumeration
/// and the closed formula |W| * C(2n + d, 2n), for cross-checking.
pub fn pbw_monomial_count(alg: &Arc<Algebra>, d: u32) -> (u64, u64) {
    let n = alg.nvars();
    fn binom_count(slots: usize, d: u32) -> u64 {
        let mut acc: u64 = 1;
        for i in 1..=slots as u64 {
            acc = acc * (d as u64 + i) / i;
        }
        acc
    }
    fn rec(slots: usize, left: u32, pos: usize, count: &mut u64) {
        if pos == slots {
            *count += 1;
            return;
        }
        for v in 0..=left {
            rec(slots, left - v, pos + 1, count);
        }
    }
    let mut direct: u64 = 0;
    rec(2 * n, d, 0, &mut direct);
    (
        direct * alg.spec.order() as u64,
        binom_count(2 * n, d) * alg.spec.order() as u64,
    )
}

/// Seeded random element with the given caps on filtration degree and
/// number of terms; coefficients are small integers.
pub fn random_element(
    alg: &Arc<Algebra>,
    rng: &mut impl Rng,
    max_degree: u32,
    max_terms: usize,
) -> SraElement {
    let n = alg.nvars();
    let elements = alg.spec.elements();
    let mut out = SraElement::zero(alg);
    let terms = rng.gen_range(1..=max_terms);
    for _ in 0..terms {
        let mut x = vec![0u32; n];
        let mut y = vec![0u32; n];
        let mut left = rng.gen_range(0..=max_degree);
        while left > 0 {
            let slot = rng.gen_range(0..2 * n);
            if slot < n {
                x[slot] += 1;
            } else {
                y[slot - n] += 1;
            }
            left -= 1;
        }
        let w = elements[rng.gen_range(0..elements.len())].clone();
        let coeff: i64 = rng.gen_range(-4..=4);
        out.add_term(PbwMonomial { x, y, w }, TPoly::constant(int(coeff)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::rat;
    use crate::groups::kappa::{build_kappa, ClassFunction};
    use crate::groups::spec::GroupSpec;
    use rand::SeedableRng;

    fn h_sn(n: usize, c: i64) -> Arc<Algebra> {
        Algebra::symmetric(n, int(c), TPoly::t()).unwrap()
    }

    #[test]
    fn jacobi_passes_for_built_kappa() {
        for (spec, c) in [
            (
                GroupSpec::symmetric(3),
                ClassFunction::constant(&GroupSpec::symmetric(3), rat(2, 3)).unwrap(),
            ),
            (
                GroupSpec::dihedral(6),
                ClassFunction::dihedral_pair(&GroupSpec::dihedral(6), int(1), rat(1, 2)).unwrap(),
            ),
            (
                GroupSpec::wreath(3, 2),
                ClassFunction::wreath_pair(&GroupSpec::wreath(3, 2), int(1), &[rat(1, 2), int(2)])
                    .unwrap(),
            ),
        ] {
            let kp = build_kappa(&spec, &c, &TPoly::t()).unwrap();
            assert!(jacobi_check(&kp).unwrap().pass, "jacobi fails for {spec}");
        }
    }

    #[test]
    fn jacobi_fails_for_perturbed_kappa() {
        let spec = GroupSpec::wreath(3, 2);
        let c = ClassFunction::wreath_pair(&spec, int(1), &[int(1), int(1)]).unwrap();
        let mut kp = build_kappa(&spec, &c, &TPoly::t()).unwrap();
        // perturb the coefficient of one single reflection in kappa(x_1, y_1)
        let s = spec
            .classify_reflections()
            .unwrap()
            .into_iter()
            .find(|cl| cl.id == "S")
            .unwrap()
            .representative;
        kp.perturb(0, 2, &s, int(1));
        let rep = jacobi_check(&kp).unwrap();
        assert!(!rep.pass);
        assert!(rep.witness.is_some());
    }

    #[test]
    fn partial_bracket_of_total_momenta() {
        // {sum y_i, sum x_i} = n in H_{0,c}(S_n)
        for n in [2usize, 3] {
            let alg = h_sn(n, 1);
            let z = phi(&alg, 1);
            let u = psi(&alg, 1);
            let b = partial_bracket(&z, &u).unwrap();
            let expect = SraElement::scalar(&b.algebra, TPoly::constant(int(n as i64)));
            assert_eq!(b, expect);
        }
    }

    #[test]
    fn partial_bracket_rejects_general_center() {
        let alg = h_sn(2, 1);
        // x_1 y_1 is neither pure-x nor pure-y
        let z = SraElement::x(&alg, 0).mul(&SraElement::y(&alg, 0)).unwrap();
        assert!(partial_bracket(&z, &psi(&alg, 1)).is_err());
        // x_1 alone is not W-invariant
        assert!(partial_bracket(&SraElement::x(&alg, 0), &psi(&alg, 1)).is_err());
    }

    #[test]
    fn centrality_examples() {
        let alg0 = Algebra::symmetric(3, int(1), TPoly::zero()).unwrap();
        assert!(centrality_check(&psi(&alg0, 2)).unwrap());
        let x1 = SraElement::x(&alg0, 0);
        assert!(!centrality_check(&x1).unwrap());
        let one = SraElement::scalar(&alg0, TPoly::constant(int(3)));
        assert!(centrality_check(&one).unwrap());
    }

    #[test]
    fn translation_endomorphism_is_homomorphism() {
        // a_f with f = x1^2 + x2^2: y_i -> y_i - 2 x_i
        let alg = h_sn(2, 1);
        let f = {
            let x0 = MultiPoly::var(2, 0);
            let x1 = MultiPoly::var(2, 1);
            &x0.pow(2) + &x1.pow(2)
        };
        let phi_spec = EndoSpec::translation_by_x_poly(&alg, &f);
        let expect = SraElement::y(&alg, 0)
            .sub(&SraElement::x(&alg, 0).scale(&TPoly::constant(int(2))))
            .unwrap();
        assert_eq!(phi_spec.y_images[0], expect);
        assert!(check_homomorphism(&alg, &phi_spec).unwrap());
    }

    #[test]
    fn fourier_squares_to_minus_one_on_v() {
        let alg = h_sn(2, 1);
        let f = EndoSpec::fourier(&alg).unwrap();
        let x1 = SraElement::x(&alg, 0);
        let once = apply_endomorphism(&f, &x1).unwrap();
        let twice = apply_endomorphism(&f, &once).unwrap();
        assert_eq!(twice, x1.scale(&TPoly::constant(int(-1))));
        assert!(check_homomorphism(&alg, &f).unwrap());
    }

    #[test]
    fn shear_is_homomorphism() {
        let alg = h_sn(3, 1);
        let b = EndoSpec::b_shear(&alg, rat(2, 3), 1);
        assert!(check_homomorphism(&alg, &b).unwrap());
        let a = EndoSpec::a_shear(&alg, int(2), 2);
        assert!(check_homomorphism(&alg, &a).unwrap());
    }

    #[test]
    fn trig_family_commutes() {
        let alg = Algebra::symmetric(3, int(1), TPoly::constant(int(1))).unwrap();
        let z = trig_elements(&alg).unwrap();
        // z_1 = x1 y1, z_2 = x2 y2 - s12
        let z1 = SraElement::x(&alg, 0).mul(&SraElement::y(&alg, 0)).unwrap();
        assert_eq!(z[0], z1);
        assert!(commuting_family_check(&alg, &int(1), &int(0), &int(0)).unwrap());
        assert!(commuting_family_check(&alg, &int(1), &int(1), &int(1)).unwrap());
    }

    #[test]
    fn derivation_matches_partial_bracket() {
        // theta_f(u) = {f, u} at t = 0 for f = psi_2
        let alg = h_sn(2, 1);
        let f_poly = {
            let x0 = MultiPoly::var(2, 0);
            let x1 = MultiPoly::var(2, 1);
            &x0.pow(2) + &x1.pow(2)
        };
        let f = psi(&alg, 2);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let u = random_element(&alg, &mut rng, 3, 3);
            let via_bracket = partial_bracket(&f, &u).unwrap();
            let d = DerSpec::theta_x_poly(&alg, &f_poly);
            let via_derivation = apply_derivation(&d, &u).unwrap();
            let t0 = &via_bracket.algebra;
            let mut moved = SraElement::zero(t0);
            for (m, c) in via_derivation.t0_part().terms() {
                moved.add_term(m.clone(), c.clone());
            }
            assert_eq!(via_bracket, moved);
        }
    }

    #[test]
    fn pbw_counts_agree() {
        let alg = h_sn(3, 1);
        for d in 0..=4 {
            let (a, b) = pbw_monomial_count(&alg, d);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn seeded_associativity() {
        let alg = h_sn(2, 1);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let a = random_element(&alg, &mut rng, 2, 2);
            let b = random_element(&alg, &mut rng, 2, 2);
            let c = random_element(&alg, &mut rng, 2, 2);
            let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
            let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn spherical_commutes_at_t_zero() {
        let alg = h_sn(2, 1);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let u = spherical(&random_element(&alg, &mut rng, 2, 2));
            let v = spherical(&random_element(&alg, &mut rng, 2, 2));
            let com = u.commutator(&v).unwrap();
            assert!(com.t0_part().is_zero());
        }
    }
}

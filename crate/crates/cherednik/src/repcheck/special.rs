//! The six-dimensional modules of the dihedral algebras at t = 0: the
//! hexagonal case splits into a plus and a minus module (trivial + sign +
//! two copies of the suitably twisted reflection representation), and the
//! same solver runs for any dihedral order m >= 5 over the real cyclotomic
//! field of 2cos(2*pi/m).
//!
//! Construction: the y- and x-actions are W-equivariant block maps with
//! four vector parameters each; the y-side is gauge-fixed from the
//! commutativity relation, the x-side is then solved from a linear system,
//! and the full relation suite over the field is the final arbiter.

use std::sync::Arc;

use crate::error::{CherednikError, Result};
use crate::field::{CycReal, CycRealField, Field};
use crate::linalg::Mat;

/// Which half of the even-order module pair to build (the odd case has a
/// single module and ignores the distinction).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    Plus,
    Minus,
}

/// A six-dimensional module over the dihedral algebra with coefficients in
/// an exact field F.
pub struct DihedralModule<F: Field> {
    pub m: u32,
    pub variant: Variant,
    /// matrices of the rotation and the reflection
    pub rot: Mat<F>,
    pub refl: Mat<F>,
    /// actions of x_1, x_2 (dual basis of h*) and y_1, y_2 (basis of h)
    pub x_mats: [Mat<F>; 2],
    pub y_mats: [Mat<F>; 2],
    /// the solved normalization constant of the cross relation
    pub k_value: F,
}

/// Group and root data of the dihedral algebra over F.
pub struct DihedralData<F: Field> {
    pub m: u32,
    /// 2x2 h-action of the rotation and the reflection
    pub r: Mat<F>,
    pub s: Mat<F>,
    /// the half-turn intertwiner J = r - z/2 with J w = sign(w) w J
    pub j: Mat<F>,
    /// invariant symmetric form on h
    pub b: Mat<F>,
    /// per reflection r^j s: the h-matrix, the root (in h*), the coroot
    /// (in h, normalized to pairing 2), and the parameter index (0 or 1)
    pub reflections: Vec<(Mat<F>, Vec<F>, Vec<F>, usize)>,
}

fn mat2<F: Field>(a: F, b: F, c: F, d: F) -> Mat<F> {
    Mat::from_rows(vec![vec![a, b], vec![c, d]])
}

/// Kernel vector of a rank-one 2x2 matrix.
fn kernel_vec2<F: Field>(m: &Mat<F>) -> Result<Vec<F>> {
    let k = m.kernel();
    if k.len() != 1 {
        return Err(CherednikError::Internal(
            "expected a one-dimensional kernel".into(),
        ));
    }
    Ok(k.into_iter().next().unwrap())
}

impl<F: Field> DihedralData<F> {
    /// Builds the data from the value z = 2cos(2*pi/m) in F.
    pub fn new(m: u32, z: F) -> Result<DihedralData<F>> {
        let one = z.one();
        let zero = z.zero();
        let half = {
            let two = one.add(&one);
            two.inv()
        };
        let r = mat2(zero.clone(), one.neg(), one.clone(), z.clone());
        let s = mat2(zero.clone(), one.clone(), one.clone(), zero.clone());
        // J = r - (z/2) Id
        let zh = z.mul(&half);
        let j = &r - &Mat::identity_like(2, &one).scale(&zh);
        // invariant form: sum over the group of g^T g
        let mut b = Mat::zero_like(2, 2, &one);
        let mut rj = Mat::identity_like(2, &one);
        for _ in 0..m {
            for refl in [false, true] {
                let g = if refl { rj.mul_mat(&s) } else { rj.clone() };
                b = &b + &g.transpose().mul_mat(&g);
            }
            rj = rj.mul_mat(&r);
        }
        let mut reflections = Vec::new();
        let mut rk = Mat::identity_like(2, &one);
        for jdx in 0..m {
            let h_mat = rk.mul_mat(&s);
            // coroot: -1 eigenvector of the h-action
            let coroot_raw =
                kernel_vec2(&(&h_mat + &Mat::identity_like(2, &one)))?;
            // root: -1 eigenvector of the h*-action = transpose (an
            // involution is its own inverse)
            let alpha = kernel_vec2(&(&h_mat.transpose() + &Mat::identity_like(2, &one)))?;
            // normalize <alpha, coroot> = 2
            let pairing = alpha[0]
                .mul(&coroot_raw[0])
                .add(&alpha[1].mul(&coroot_raw[1]));
            if pairing.is_zero() {
                return Err(CherednikError::Internal(
                    "degenerate root/coroot pairing".into(),
                ));
            }
            let scale = one.add(&one).mul(&pairing.inv());
            let coroot = vec![coroot_raw[0].mul(&scale), coroot_raw[1].mul(&scale)];
            let class = if m % 2 == 0 { (jdx % 2) as usize } else { 0 };
            reflections.push((h_mat, alpha, coroot, class));
            rk = rk.mul_mat(&r);
        }
        Ok(DihedralData {
            m,
            r,
            s,
            j,
            b,
            reflections,
        })
    }

    /// The t = 0 commutation right-hand side `[y, x] = -1/2 sum_alpha
    /// c_alpha <y, alpha> <alpha_vee, x> s_alpha`, as a function handing
    /// each reflection's coefficient to a visitor.
    pub fn commutation_rhs(
        &self,
        c: &[F; 2],
        y: usize,
        x: usize,
        mut visit: impl FnMut(usize, F),
    ) {
        let one = c[0].one();
        let half = one.add(&one).inv();
        for (idx, (_, alpha, coroot, class)) in self.reflections.iter().enumerate() {
            // both root signs give the same reflection: the unordered pair
            // contributes -c <y, alpha><coroot, x>
            let coeff = c[*class]
                .mul(&alpha[y])
                .mul(&coroot[x])
                .neg();
            let _ = half;
            visit(idx, coeff);
        }
    }
}

/// Characters of the constituents per variant: values on (r, s).
fn characters<F: Field>(one: &F, m: u32, variant: Variant) -> ([F; 2], [F; 2], F) {
    // (chi_T(r), chi_T(s)), (chi_S(r), chi_S(s)), twist of D on r
    let neg = one.neg();
    if m % 2 == 0 && variant == Variant::Minus {
        (
            [neg.clone(), one.clone()],
            [neg.clone(), neg.clone()],
            neg,
        )
    } else {
        (
            [one.clone(), one.clone()],
            [one.clone(), neg.clone()],
            one.clone(),
        )
    }
}

/// Six-by-six representation matrix of the group generator.
fn rho_gen<F: Field>(
    data: &DihedralData<F>,
    variant: Variant,
    which_s: bool,
) -> Mat<F> {
    let one = data.r[(0, 0)].one();
    let (chi_t, chi_s, twist) = characters(&one, data.m, variant);
    let d_mat = if which_s {
        data.s.clone()
    } else {
        data.r.scale(&twist)
    };
    let (t_val, s_val) = if which_s {
        (chi_t[1].clone(), chi_s[1].clone())
    } else {
        (chi_t[0].clone(), chi_s[0].clone())
    };
    let mut m = Mat::zero_like(6, 6, &one);
    m[(0, 0)] = t_val;
    m[(1, 1)] = s_val;
    // L (x) D with basis (l1 d1, l1 d2, l2 d1, l2 d2): Id_L (x) d_mat
    for l in 0..2 {
        for a in 0..2 {
            for b in 0..2 {
                m[(2 + 2 * l + a, 2 + 2 * l + b)] = d_mat[(a, b)].clone();
            }
        }
    }
    m
}

/// Assembles the equivariant block map with parameters (a, b, alpha, beta):
/// rows T and S over L (x) D, columns T and S from L (x) D.
///
/// For the y-side (`dual = false`, argument y in h):
///   T row: (l (x) d) -> a(l) B(y, d);   S row: b(l) B(y, J d)
///   T col: v_T -> alpha (x) y;          S col: beta (x) J y
/// For the x-side (`dual = true`, argument x in h*):
///   T row: a(l) <x, d>;                 S row: b(l) <x, J d>
///   T col: alpha (x) B^{-1} x;          S col: beta (x) J B^{-1} x
fn assemble<F: Field>(
    data: &DihedralData<F>,
    dual: bool,
    arg: &[F],
    av: &[F],
    bv: &[F],
    alpha: &[F],
    beta: &[F],
) -> Mat<F> {
    let one = data.r[(0, 0)].one();
    let mut m = Mat::zero_like(6, 6, &one);
    // the h-vector used on the column side, and the covector used on rows
    let binv = data.b.inverse().expect("invariant form invertible");
    let col_vec: Vec<F> = if dual {
        binv.mul_vec(arg)
    } else {
        arg.to_vec()
    };
    let row_form: Vec<F> = if dual {
        // d -> <x, d>
        arg.to_vec()
    } else {
        // d -> B(y, d)
        data.b.mul_vec(arg)
    };
    let jt = data.j.transpose();
    let row_form_j: Vec<F> = jt.mul_vec(&row_form.clone());
    // wait: <x, J d> = (J^T x)(d); B(y, J d) = (J^T B y)(d)
    let j_col: Vec<F> = data.j.mul_vec(&col_vec);
    for l in 0..2 {
        for d in 0..2 {
            let idx = 2 + 2 * l + d;
            // T row
            m[(0, idx)] = av[l].mul(&row_form[d]);
            // S row
            m[(1, idx)] = bv[l].mul(&row_form_j[d]);
            // T column
            m[(idx, 0)] = alpha[l].mul(&col_vec[d]);
            // S column
            m[(idx, 1)] = beta[l].mul(&j_col[d]);
        }
    }
    m
}

/// Builds one six-dimensional module for dihedral order m and parameters
/// (c1, c2) in the field F with z = 2cos(2*pi/m).
pub fn dihedral_module<F: Field>(
    m: u32,
    z: F,
    c1: F,
    c2: F,
    variant: Variant,
) -> Result<DihedralModule<F>> {
    let one = z.one();
    let data = DihedralData::new(m, z)?;
    let c = [c1, c2];
    let e1 = vec![one.clone(), one.zero()];
    let e2 = vec![one.zero(), one.clone()];

    // gauge-fixed y-side: alpha1 = e1, a1 = e2*, beta1 = alpha1,
    // b1 = -(1/lambda) a1, where K2 = lambda K1 for the rank-two blocks
    // K1 = v (x) B(w, .) - w (x) B(v, .), K2 = Jv (x) B(w, J.) - Jw (x) B(v, J.)
    let k1 = {
        let bw = data.b.mul_vec(&e2);
        let bv = data.b.mul_vec(&e1);
        let mut k = Mat::zero_like(2, 2, &one);
        for i in 0..2 {
            for jx in 0..2 {
                k[(i, jx)] = e1[i].mul(&bw[jx]).sub(&e2[i].mul(&bv[jx]));
            }
        }
        k
    };
    let k2 = {
        let jv = data.j.mul_vec(&e1);
        let jw = data.j.mul_vec(&e2);
        let jt = data.j.transpose();
        let bjw = jt.mul_vec(&data.b.mul_vec(&e2));
        let bjv = jt.mul_vec(&data.b.mul_vec(&e1));
        let mut k = Mat::zero_like(2, 2, &one);
        for i in 0..2 {
            for jx in 0..2 {
                k[(i, jx)] = jv[i].mul(&bjw[jx]).sub(&jw[i].mul(&bjv[jx]));
            }
        }
        k
    };
    // lambda with K2 = lambda K1
    let mut lambda = None;
    'find: for i in 0..2 {
        for jx in 0..2 {
            if !k1[(i, jx)].is_zero() {
                lambda = Some(k2[(i, jx)].mul(&k1[(i, jx)].inv()));
                break 'find;
            }
        }
    }
    let lambda = lambda.ok_or_else(|| {
        CherednikError::Internal("degenerate commutator block in the y-side".into())
    })?;
    if &k1.scale(&lambda) != &k2 {
        return Err(CherednikError::Internal(
            "the skew block is not proportional to the symmetric block".into(),
        ));
    }
    let a1 = e2.clone();
    let b1: Vec<F> = a1.iter().map(|v| v.mul(&lambda.inv()).neg()).collect();
    let alpha1 = e1.clone();
    let beta1 = e1.clone();

    let f1 = |y: &[F]| assemble(&data, false, y, &a1, &b1, &alpha1, &beta1);
    // commutativity of the y-side must hold before solving
    let test = f1(&e1).mul_mat(&f1(&e2));
    let test2 = f1(&e2).mul_mat(&f1(&e1));
    if test != test2 {
        return Err(CherednikError::Internal(
            "gauge-fixed y-side does not commute".into(),
        ));
    }

    // linear solve for the x-side parameters (a2, b2, alpha2, beta2):
    // [f1(y), f2(x)] = rhs(y, x) for (y, x) in the basis pairs
    let rho_r = rho_gen(&data, variant, false);
    let rho_s = rho_gen(&data, variant, true);
    let rho_of = |h_index: usize| -> Mat<F> {
        // reflection r^j s
        let mut mmat = Mat::identity_like(6, &one);
        for _ in 0..h_index {
            mmat = mmat.mul_mat(&rho_r);
        }
        mmat.mul_mat(&rho_s)
    };
    let mut rows: Vec<Vec<F>> = Vec::new();
    let mut rhs_vals: Vec<F> = Vec::new();
    let unit = |k: usize| -> (Vec<F>, Vec<F>, Vec<F>, Vec<F>) {
        let mut a = vec![one.zero(); 2];
        let mut b = vec![one.zero(); 2];
        let mut al = vec![one.zero(); 2];
        let mut be = vec![one.zero(); 2];
        match k / 2 {
            0 => a[k % 2] = one.clone(),
            1 => b[k % 2] = one.clone(),
            2 => al[k % 2] = one.clone(),
            _ => be[k % 2] = one.clone(),
        }
        (a, b, al, be)
    };
    for (yi, yv) in [(0usize, &e1), (1, &e2)] {
        for (xi, xv) in [(0usize, &e1), (1, &e2)] {
            // rhs matrix: [y, x] = -sum_refl c <y,alpha><coroot,x> rho(s)
            let mut rhs = Mat::zero_like(6, 6, &one);
            data.commutation_rhs(&c, yi, xi, |idx, coeff| {
                if !coeff.is_zero() {
                    rhs = &rhs + &rho_of(idx).scale(&coeff);
                }
            });
            let fy = f1(yv);
            // columns: d/du_k of [fy, f2(xv)]
            let mut cols: Vec<Mat<F>> = Vec::with_capacity(8);
            for k in 0..8 {
                let (a, b, al, be) = unit(k);
                let f2k = assemble(&data, true, xv, &a, &b, &al, &be);
                cols.push(&fy.mul_mat(&f2k) - &f2k.mul_mat(&fy));
            }
            for p in 0..6 {
                for q in 0..6 {
                    let row: Vec<F> = (0..8).map(|k| cols[k][(p, q)].clone()).collect();
                    if row.iter().all(|v| v.is_zero()) && rhs[(p, q)].is_zero() {
                        continue;
                    }
                    rows.push(row);
                    rhs_vals.push(rhs[(p, q)].clone());
                }
            }
        }
    }
    let system = Mat::from_rows(rows);
    let solution = system.solve(&rhs_vals).ok_or_else(|| {
        CherednikError::Domain(
            "no six-dimensional module exists for these parameters (degenerate c1 +/- c2)"
                .into(),
        )
    })?;
    let a2 = vec![solution[0].clone(), solution[1].clone()];
    let b2 = vec![solution[2].clone(), solution[3].clone()];
    let alpha2 = vec![solution[4].clone(), solution[5].clone()];
    let beta2 = vec![solution[6].clone(), solution[7].clone()];
    // reject the collapsed solution (x acting without the off blocks)
    if alpha2.iter().all(|v| v.is_zero()) || a2.iter().all(|v| v.is_zero()) {
        return Err(CherednikError::Domain(
            "degenerate parameters: the x-action collapses".into(),
        ));
    }
    let f2 = |x: &[F]| assemble(&data, true, x, &a2, &b2, &alpha2, &beta2);

    // the solved normalization constant of the cross relation
    let k_value = a1[0]
        .mul(&alpha2[0])
        .add(&a1[1].mul(&alpha2[1]))
        .sub(&a2[0].mul(&alpha1[0]).add(&a2[1].mul(&alpha1[1])));

    let module = DihedralModule {
        m,
        variant,
        rot: rho_r,
        refl: rho_s,
        x_mats: [f2(&e1), f2(&e2)],
        y_mats: [f1(&e1), f1(&e2)],
        k_value,
    };
    match verify_dihedral_module(&data, &c, &module) {
        Ok(()) => Ok(module),
        Err(e) => Err(e),
    }
}

/// Full relation check over F: group presentation, equivariance, x- and
/// y-commutativity, and the cross commutation relations.
pub fn verify_dihedral_module<F: Field>(
    data: &DihedralData<F>,
    c: &[F; 2],
    md: &DihedralModule<F>,
) -> Result<()> {
    let one = data.r[(0, 0)].one();
    let id = Mat::identity_like(6, &one);
    let fail = |msg: &str| Err(CherednikError::Internal(format!("relation failed: {msg}")));
    // group presentation
    if md.rot.pow(data.m) != id {
        return fail("r^m = 1");
    }
    if md.refl.mul_mat(&md.refl) != id {
        return fail("s^2 = 1");
    }
    let srs = md.refl.mul_mat(&md.rot).mul_mat(&md.refl);
    if srs.mul_mat(&md.rot) != id {
        return fail("s r s = r^{-1}");
    }
    // equivariance: w f(v) w^{-1} = f(w v); the rotation acts on h by r and
    // on h* by (r^{-1})^T (s is its own inverse)
    let r_inv = data.r.inverse()?;
    let rot_dual = r_inv.transpose();
    let s_dual = data.s.transpose();
    let rho_r_inv = md.rot.inverse()?;
    let e_basis = [vec![one.clone(), one.zero()], vec![one.zero(), one.clone()]];
    for (i, e) in e_basis.iter().enumerate() {
        // y-side
        let lhs = md.rot.mul_mat(&md.y_mats[i]).mul_mat(&rho_r_inv);
        let ry = data.r.mul_vec(e);
        let rhs = &md.y_mats[0].scale(&ry[0]) + &md.y_mats[1].scale(&ry[1]);
        if lhs != rhs {
            return fail("rotation equivariance on y");
        }
        let lhs = md.refl.mul_mat(&md.y_mats[i]).mul_mat(&md.refl);
        let sy = data.s.mul_vec(e);
        let rhs = &md.y_mats[0].scale(&sy[0]) + &md.y_mats[1].scale(&sy[1]);
        if lhs != rhs {
            return fail("reflection equivariance on y");
        }
        // x-side
        let lhs = md.rot.mul_mat(&md.x_mats[i]).mul_mat(&rho_r_inv);
        let rx = rot_dual.mul_vec(e);
        let rhs = &md.x_mats[0].scale(&rx[0]) + &md.x_mats[1].scale(&rx[1]);
        if lhs != rhs {
            return fail("rotation equivariance on x");
        }
        let lhs = md.refl.mul_mat(&md.x_mats[i]).mul_mat(&md.refl);
        let sx = s_dual.mul_vec(e);
        let rhs = &md.x_mats[0].scale(&sx[0]) + &md.x_mats[1].scale(&sx[1]);
        if lhs != rhs {
            return fail("reflection equivariance on x");
        }
    }
    // commutativity within x and within y
    if md.x_mats[0].mul_mat(&md.x_mats[1]) != md.x_mats[1].mul_mat(&md.x_mats[0]) {
        return fail("[x1, x2] = 0");
    }
    if md.y_mats[0].mul_mat(&md.y_mats[1]) != md.y_mats[1].mul_mat(&md.y_mats[0]) {
        return fail("[y1, y2] = 0");
    }
    // cross relations
    let rho_of = |h_index: usize| -> Mat<F> {
        let mut mmat = Mat::identity_like(6, &one);
        for _ in 0..h_index {
            mmat = mmat.mul_mat(&md.rot);
        }
        mmat.mul_mat(&md.refl)
    };
    for yi in 0..2 {
        for xi in 0..2 {
            let lhs = &md.y_mats[yi].mul_mat(&md.x_mats[xi])
                - &md.x_mats[xi].mul_mat(&md.y_mats[yi]);
            let mut rhs = Mat::zero_like(6, 6, &one);
            data.commutation_rhs(c, yi, xi, |idx, coeff| {
                if !coeff.is_zero() {
                    rhs = &rhs + &rho_of(idx).scale(&coeff);
                }
            });
            if lhs != rhs {
                return fail("[y, x] commutation");
            }
        }
    }
    Ok(())
}

/// Character of the module on the conjugacy class representatives
/// `r^j` and `r^j s`, as (rotation traces, reflection traces).
pub fn module_character<F: Field>(md: &DihedralModule<F>) -> (Vec<F>, Vec<F>) {
    let one = md.rot[(0, 0)].one();
    let mut rot_tr = Vec::new();
    let mut refl_tr = Vec::new();
    let mut acc = Mat::identity_like(6, &one);
    for _ in 0..md.m {
        rot_tr.push(acc.trace());
        refl_tr.push(acc.mul_mat(&md.refl).trace());
        acc = acc.mul_mat(&md.rot);
    }
    (rot_tr, refl_tr)
}

/// Builds both hexagonal-case modules over the rationals and re-verifies
/// them through the generic rational relation checker.
pub fn g2_modules(
    c1: crate::exact::scalar::Scalar,
    c2: crate::exact::scalar::Scalar,
) -> Result<(
    DihedralModule<crate::exact::scalar::Scalar>,
    DihedralModule<crate::exact::scalar::Scalar>,
)> {
    use crate::exact::scalar::int;
    let plus = dihedral_module(6, int(1), c1.clone(), c2.clone(), Variant::Plus)?;
    let minus = dihedral_module(6, int(1), c1, c2, Variant::Minus)?;
    Ok((plus, minus))
}

/// Runs the solver for an odd dihedral order over the real cyclotomic
/// field Q(2cos(2*pi/m)).
pub fn dihedral_module_cyclotomic(
    m: u32,
    c1: crate::exact::scalar::Scalar,
    c2: crate::exact::scalar::Scalar,
) -> Result<DihedralModule<CycReal>> {
    let field: Arc<CycRealField> = CycRealField::new(m);
    let z = field.generator();
    dihedral_module(
        m,
        z,
        field.from_scalar(c1),
        field.from_scalar(c2),
        Variant::Plus,
    )
}

impl DihedralModule<crate::exact::scalar::Scalar> {
    /// Packages the module as a rational representation so the main
    /// relation checker (built on the symplectic pairing) can re-verify
    /// it independently of the root-system form used by the solver.
    pub fn to_representation(
        &self,
        c1: crate::exact::scalar::Scalar,
        c2: crate::exact::scalar::Scalar,
    ) -> Result<super::rep::Representation> {
        use crate::groups::kappa::ClassFunction;
        use crate::groups::spec::GroupSpec;
        let spec = GroupSpec::dihedral(self.m);
        let c = ClassFunction::dihedral_pair(&spec, c1, c2)?;
        Ok(super::rep::Representation {
            spec,
            t: crate::exact::scalar::int(0),
            c,
            x_mats: self.x_mats.to_vec(),
            y_mats: self.y_mats.to_vec(),
            gen_mats: vec![self.rot.clone(), self.refl.clone()],
            dim: 6,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{int, rat};

    #[test]
    fn root_form_matches_symplectic_pairing() {
        // the (root, coroot) commutation data used by this solver and the
        // projector-based pairing of the main engine give the same kappa
        use crate::groups::kappa::{build_kappa, ClassFunction};
        use crate::groups::spec::GroupSpec;
        use crate::exact::tpoly::TPoly;
        let spec = GroupSpec::dihedral(6);
        let c1 = rat(2, 3);
        let c2 = rat(-1, 5);
        let cf = ClassFunction::dihedral_pair(&spec, c1.clone(), c2.clone()).unwrap();
        let kp = build_kappa(&spec, &cf, &TPoly::zero()).unwrap();
        let data = DihedralData::new(6, int(1)).unwrap();
        let elements = spec.elements();
        for yi in 0..2usize {
            for xi in 0..2usize {
                // kappa(y_i, x_j) from the engine
                let engine = kp.basis(2 + yi, xi);
                // [y, x] from the root data: -sum c <y,alpha><coroot,x> s
                let mut from_roots: std::collections::BTreeMap<_, crate::exact::scalar::Scalar> =
                    Default::default();
                data.commutation_rhs(&[c1.clone(), c2.clone()], yi, xi, |idx, coeff| {
                    // reflection r^idx s as a group element
                    let g = crate::groups::element::GroupElement::dihedral(6, idx as u32, 1);
                    *from_roots.entry(g).or_insert_with(|| int(0)) += coeff;
                });
                for g in &elements {
                    let expect = from_roots.get(g).cloned().unwrap_or_else(|| int(0));
                    assert_eq!(
                        engine.coeff(g),
                        crate::exact::tpoly::TPoly::constant(expect),
                        "mismatch at y{} x{} on {g:?}",
                        yi + 1,
                        xi + 1
                    );
                }
            }
        }
    }

    #[test]
    fn hexagonal_module_passes_the_main_checker() {
        let (plus, minus) = g2_modules(int(1), rat(1, 2)).unwrap();
        for md in [plus, minus] {
            let rep = md.to_representation(int(1), rat(1, 2)).unwrap();
            assert!(rep.verify().unwrap().is_ok());
            // six-dimensional, so not a multiple of the regular
            // twelve-dimensional representation
            assert!(!rep.regular_test());
            assert!(rep.burnside_simplicity());
        }
    }

    #[test]
    fn hexagonal_modules_exist() {
        let (plus, minus) = g2_modules(int(1), rat(1, 2)).unwrap();
        assert_eq!(plus.x_mats[0].nrows(), 6);
        assert_eq!(minus.x_mats[0].nrows(), 6);
        // k-values differ between the variants
        assert!(!plus.k_value.is_zero());
        assert!(!minus.k_value.is_zero());
    }

    #[test]
    fn characters_match_constituents() {
        let (plus, _minus) = g2_modules(int(1), rat(1, 3)).unwrap();
        let data = DihedralData::new(6, int(1)).unwrap();
        let (rot_tr, refl_tr) = module_character(&plus);
        // expected: chi_T + chi_S + 2 tr(D) with D the h-representation
        let mut acc = Mat::identity_like(2, &int(0));
        for jdx in 0..6 {
            let expect = int(1) + int(1) + int(2) * acc.trace();
            assert_eq!(rot_tr[jdx], expect, "rotation power {jdx}");
            let refl_expected = int(1) + int(-1) + int(2) * acc.mul_mat(&data.s).trace();
            assert_eq!(refl_tr[jdx], refl_expected);
            acc = acc.mul_mat(&data.r);
        }
        // the central half-turn acts with trace 1 + 1 - 2*2 = -2 on the
        // plus module (D is the faithful reflection representation)
        assert_eq!(rot_tr[3], int(-2));
    }

    #[test]
    fn degenerate_parameters_rejected() {
        // c1 + c2 = 0 kills the plus module
        assert!(dihedral_module(6, int(1), int(1), int(-1), Variant::Plus).is_err());
        // and c1 - c2 = 0 kills the minus module
        assert!(dihedral_module(6, int(1), int(1), int(1), Variant::Minus).is_err());
        // but the opposite variant still exists in each case
        assert!(dihedral_module(6, int(1), int(1), int(-1), Variant::Minus).is_ok());
        assert!(dihedral_module(6, int(1), int(1), int(1), Variant::Plus).is_ok());
    }

    #[test]
    fn pentagon_module_over_extension() {
        let md = dihedral_module_cyclotomic(5, int(1), int(1)).unwrap();
        assert_eq!(md.m, 5);
        // six-dimensional with regular-minus-... : trace of identity is 6
        let (rot_tr, _) = module_character(&md);
        let field = CycRealField::new(5);
        assert_eq!(rot_tr[0], field.from_scalar(int(6)));
    }
}

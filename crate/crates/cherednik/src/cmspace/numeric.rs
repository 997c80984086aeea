//! Numeric diagnostics for the wreath matrix space: the dimension count
//! through the rank of the moment-map differential, and a seeded
//! Gauss-Newton point finder. These are the only floating-point paths in
//! the crate; smoothness and dimension statements are analytic by nature.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use super::wreath::WreathPoint;
use crate::error::{CherednikError, Result};
use crate::linalg::QMatrix;

pub const NUMERIC_TOL: f64 = 1e-9;

/// Float copy of a wreath point.
#[derive(Clone, Debug)]
pub struct FloatWreathPoint {
    pub l: u32,
    pub n: usize,
    pub k: f64,
    pub cprime: Vec<f64>,
    pub nabla1: DMatrix<f64>,
    pub nabla2: DMatrix<f64>,
}

impl FloatWreathPoint {
    pub fn from_exact(w: &WreathPoint) -> Self {
        FloatWreathPoint {
            l: w.l,
            n: w.n,
            k: scalar_to_f64(&w.k),
            cprime: w.cprime.iter().map(scalar_to_f64).collect(),
            nabla1: w.nabla1.to_f64(),
            nabla2: w.nabla2.to_f64(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n * self.l as usize
    }
}

fn scalar_to_f64(s: &crate::exact::scalar::Scalar) -> f64 {
    let n: f64 = s.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = s.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

/// Regular-representation matrix of the cyclic generator.
fn gamma_action(l: u32, n: usize) -> DMatrix<f64> {
    let lu = l as usize;
    let d = n * lu;
    let mut m = DMatrix::zeros(d, d);
    for i in 0..n {
        for j in 0..lu {
            m[(i * lu + (j + 1) % lu, i * lu + j)] = 1.0;
        }
    }
    m
}

/// Left multiplication by `c'` on the group-algebra factor.
fn cprime_action(l: u32, n: usize, cprime: &[f64]) -> DMatrix<f64> {
    let lu = l as usize;
    let d = n * lu;
    let mut m = DMatrix::zeros(d, d);
    for i in 0..n {
        for (jidx, cj) in cprime.iter().enumerate() {
            let shift = jidx + 1;
            for j in 0..lu {
                m[(i * lu + (j + shift) % lu, i * lu + j)] += cj;
            }
        }
    }
    m
}

/// The plane action of the cyclic generator (rational model, as floats).
fn plane_action(l: u32) -> Result<[[f64; 2]; 2]> {
    let spec = crate::groups::spec::GroupSpec::wreath(l, 1);
    let gam = crate::groups::element::GroupElement::color_gen(1, 0, 1, l);
    let act = spec.action_matrix(&gam)?;
    Ok([
        [scalar_to_f64(&act[(0, 0)]), scalar_to_f64(&act[(0, 1)])],
        [scalar_to_f64(&act[(1, 0)]), scalar_to_f64(&act[(1, 1)])],
    ])
}

/// Basis of the space of equivariant pairs, as flattened vectors of length
/// 2 d^2, computed exactly and converted to floats.
pub fn equivariant_basis(l: u32, n: usize) -> Result<Vec<DVector<f64>>> {
    let lu = l as usize;
    let d = n * lu;
    let dd = d * d;
    if l == 1 {
        // no constraint
        let mut out = Vec::with_capacity(2 * dd);
        for i in 0..2 * dd {
            let mut v = DVector::zeros(2 * dd);
            v[i] = 1.0;
            out.push(v);
        }
        return Ok(out);
    }
    let spec = crate::groups::spec::GroupSpec::wreath(l, 1);
    let gam = crate::groups::element::GroupElement::color_gen(1, 0, 1, l);
    let act = spec.action_matrix(&gam)?;
    // exact constraint matrix on the 2 d^2 unknowns
    let rho = {
        let mut m = QMatrix::zeros(d, d);
        for i in 0..n {
            for j in 0..lu {
                m[(i * lu + (j + 1) % lu, i * lu + j)] = crate::exact::scalar::int(1);
            }
        }
        m
    };
    let rho_inv = rho.inverse()?;
    // rho nabla_s rho^{-1} - sum_t R_{t s} nabla_t = 0 for s = 1, 2
    // unknown vector order: nabla1 entries row-major, then nabla2
    let mut rows: Vec<Vec<crate::exact::scalar::Scalar>> = Vec::new();
    for s in 0..2usize {
        for a in 0..d {
            for b in 0..d {
                let mut row = vec![crate::exact::scalar::int(0); 2 * dd];
                // (rho nabla rho^{-1})_{ab} = sum_{p,q} rho_{ap} nabla_{pq} rhoinv_{qb}
                for p in 0..d {
                    for q in 0..d {
                        let coef = &rho[(a, p)] * &rho_inv[(q, b)];
                        if !num_traits::Zero::is_zero(&coef) {
                            row[s * dd + p * d + q] = &row[s * dd + p * d + q] + &coef;
                        }
                    }
                }
                for t in 0..2usize {
                    let r = act[(t, s)].clone();
                    if !num_traits::Zero::is_zero(&r) {
                        row[t * dd + a * d + b] = &row[t * dd + a * d + b] - &r;
                    }
                }
                rows.push(row);
            }
        }
    }
    let constraint = QMatrix::from_rows(rows);
    let kernel = constraint.kernel();
    Ok(kernel
        .into_iter()
        .map(|v| DVector::from_iterator(2 * dd, v.iter().map(scalar_to_f64)))
        .collect())
}

fn commutator(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    a * b - b * a
}

fn numeric_rank(m: &DMatrix<f64>, tol: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let svd = m.clone().svd(false, false);
    svd.singular_values.iter().filter(|&&s| s > tol).count()
}

/// Dimension report at a membership point: the tangent dimension of the
/// solution variety minus the dimension of the symmetry orbit; the
/// expected value for a smooth point is 2n.
#[derive(Clone, Debug)]
pub struct JacobianReport {
    pub solution_tangent_dim: usize,
    pub orbit_dim: usize,
    pub reported_dim: isize,
    pub rank_deficient: bool,
}

pub fn moment_jacobian_report(w: &FloatWreathPoint) -> Result<JacobianReport> {
    let d = w.dim();
    let dd = d * d;
    let lu = w.l as usize;
    let basis = equivariant_basis(w.l, w.n)?;
    let dim_eq = basis.len();
    // columns of the moment differential
    let mut a_cols: Vec<DVector<f64>> = Vec::with_capacity(dim_eq);
    for v in &basis {
        let d1 = DMatrix::from_fn(d, d, |i, j| v[i * d + j]);
        let d2 = DMatrix::from_fn(d, d, |i, j| v[dd + i * d + j]);
        let dm = commutator(&d1, &w.nabla2) + commutator(&w.nabla1, &d2);
        a_cols.push(DVector::from_iterator(dd, dm.iter().cloned()));
    }
    let a = DMatrix::from_columns(&a_cols);
    // tangent of the orbit of the right-hand side: k |G| [xi, o] (x) E
    let mut b_cols: Vec<DVector<f64>> = Vec::new();
    if w.n >= 2 && w.k.abs() > NUMERIC_TOL {
        // recover o from the residual
        let resid = commutator(&w.nabla1, &w.nabla2)
            - cprime_action(w.l, w.n, &w.cprime);
        let mut o = DMatrix::zeros(w.n, w.n);
        for bi in 0..w.n {
            for bj in 0..w.n {
                o[(bi, bj)] = resid[(bi * lu, bj * lu)] * lu as f64 / (w.k * w.l as f64);
            }
        }
        for p in 0..w.n {
            for q in 0..w.n {
                let mut xi = DMatrix::zeros(w.n, w.n);
                xi[(p, q)] = 1.0;
                let t = commutator(&xi, &o) * (w.k * w.l as f64);
                // tensor with the projector E (all entries 1/l)
                let mut big = DMatrix::zeros(d, d);
                for bi in 0..w.n {
                    for bj in 0..w.n {
                        for x in 0..lu {
                            for y in 0..lu {
                                big[(bi * lu + x, bj * lu + y)] =
                                    t[(bi, bj)] / lu as f64;
                            }
                        }
                    }
                }
                b_cols.push(DVector::from_iterator(dd, big.iter().cloned()));
            }
        }
    }
    let rank_b = if b_cols.is_empty() {
        0
    } else {
        numeric_rank(&DMatrix::from_columns(&b_cols), NUMERIC_TOL)
    };
    let rank_ab = if b_cols.is_empty() {
        numeric_rank(&a, NUMERIC_TOL)
    } else {
        let mut all = a_cols.clone();
        all.extend(b_cols.iter().cloned());
        numeric_rank(&DMatrix::from_columns(&all), NUMERIC_TOL)
    };
    let solution_tangent_dim = dim_eq - (rank_ab - rank_b);
    // orbit of the equivariant automorphism group
    let mut orbit_cols: Vec<DVector<f64>> = Vec::new();
    let gam = gamma_action(w.l, w.n);
    let gam_inv = gam.clone().try_inverse().expect("permutation matrix");
    // exact basis of the commutant of gamma: solve numerically here
    let mut comm_rows: Vec<DVector<f64>> = Vec::new();
    for a_ in 0..d {
        for b_ in 0..d {
            let mut row = DVector::zeros(dd);
            for p in 0..d {
                for q in 0..d {
                    row[p * d + q] += gam[(a_, p)] * gam_inv[(q, b_)];
                }
            }
            row[a_ * d + b_] -= 1.0;
            comm_rows.push(row.transpose().transpose());
        }
    }
    let comm_mat = DMatrix::from_rows(
        &comm_rows
            .iter()
            .map(|r| r.transpose())
            .collect::<Vec<_>>(),
    );
    // kernel via SVD
    let svd = comm_mat.clone().svd(true, true);
    let v_t = svd.v_t.as_ref().expect("svd with v");
    let sv = &svd.singular_values;
    for i in 0..v_t.nrows() {
        let s = if i < sv.len() { sv[i] } else { 0.0 };
        if s <= NUMERIC_TOL {
            let xi_vec = v_t.row(i).transpose();
            let xi = DMatrix::from_fn(d, d, |p, q| xi_vec[p * d + q]);
            let t1 = commutator(&xi, &w.nabla1);
            let t2 = commutator(&xi, &w.nabla2);
            let mut col = DVector::zeros(2 * dd);
            for (idx, val) in t1.iter().enumerate() {
                col[idx] = *val;
            }
            for (idx, val) in t2.iter().enumerate() {
                col[dd + idx] = *val;
            }
            orbit_cols.push(col);
        }
    }
    // pad for matrices smaller than dd rows in the svd
    if v_t.nrows() < dd {
        return Err(CherednikError::Internal(
            "unexpected svd shape in commutant computation".into(),
        ));
    }
    let orbit_dim = if orbit_cols.is_empty() {
        0
    } else {
        numeric_rank(&DMatrix::from_columns(&orbit_cols), NUMERIC_TOL)
    };
    let reported = solution_tangent_dim as isize - orbit_dim as isize;
    Ok(JacobianReport {
        solution_tangent_dim,
        orbit_dim,
        reported_dim: reported,
        rank_deficient: reported != (2 * w.n) as isize,
    })
}

/// Seeded Gauss-Newton search for a wreath membership point; returns the
/// point and its final residual norm.
pub fn newton_find_point(
    l: u32,
    n: usize,
    k: f64,
    cprime: &[f64],
    seed: u64,
) -> Result<(FloatWreathPoint, f64)> {
    let lu = l as usize;
    let d = n * lu;
    let dd = d * d;
    let basis = equivariant_basis(l, n)?;
    let dim_eq = basis.len();
    let cp = cprime_action(l, n, cprime);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // unknowns: coefficients z (dim_eq) plus u, v (2n) when n >= 2
    let extra = if n >= 2 { 2 * n } else { 0 };
    let nvars = dim_eq + extra;
    let residual_len = dd + if n >= 2 { 1 } else { 0 };

    let build = |z: &DVector<f64>| -> (DMatrix<f64>, DMatrix<f64>) {
        let mut n1 = DMatrix::zeros(d, d);
        let mut n2 = DMatrix::zeros(d, d);
        for (c, v) in z.iter().take(dim_eq).zip(basis.iter()) {
            for i in 0..d {
                for j in 0..d {
                    n1[(i, j)] += c * v[i * d + j];
                    n2[(i, j)] += c * v[dd + i * d + j];
                }
            }
        }
        (n1, n2)
    };
    let residual = |z: &DVector<f64>| -> DVector<f64> {
        let (n1, n2) = build(z);
        let com = commutator(&n1, &n2);
        let mut target = cp.clone();
        if n >= 2 {
            let u = DVector::from_iterator(n, (0..n).map(|i| z[dim_eq + i]));
            let v = DVector::from_iterator(n, (0..n).map(|i| z[dim_eq + n + i]));
            let o = &u * v.transpose() - DMatrix::<f64>::identity(n, n);
            for bi in 0..n {
                for bj in 0..n {
                    for x in 0..lu {
                        for y in 0..lu {
                            target[(bi * lu + x, bj * lu + y)] +=
                                k * l as f64 * o[(bi, bj)] / lu as f64;
                        }
                    }
                }
            }
        }
        let diff = com - target;
        let mut r = DVector::zeros(residual_len);
        for (idx, val) in diff.iter().enumerate() {
            r[idx] = *val;
        }
        if n >= 2 {
            let u = DVector::from_iterator(n, (0..n).map(|i| z[dim_eq + i]));
            let v = DVector::from_iterator(n, (0..n).map(|i| z[dim_eq + n + i]));
            r[dd] = u.dot(&v) - n as f64;
        }
        r
    };

    let mut best: Option<(DVector<f64>, f64)> = None;
    for _attempt in 0..8 {
        let mut z = DVector::from_fn(nvars, |_, _| rng.gen_range(-1.0..1.0));
        if n >= 2 {
            for i in 0..2 * n {
                z[dim_eq + i] += 1.0;
            }
        }
        for _iter in 0..120 {
            let r = residual(&z);
            let rn = r.norm();
            if rn < 1e-13 {
                break;
            }
            // numeric Jacobian
            let mut jac = DMatrix::zeros(residual_len, nvars);
            let h = 1e-7;
            for c in 0..nvars {
                let mut zp = z.clone();
                zp[c] += h;
                let rp = residual(&zp);
                for rrow in 0..residual_len {
                    jac[(rrow, c)] = (rp[rrow] - r[rrow]) / h;
                }
            }
            let svd = jac.svd(true, true);
            match svd.solve(&r, 1e-10) {
                Ok(step) => {
                    z -= 0.9 * step;
                }
                Err(_) => break,
            }
        }
        let rn = residual(&z).norm();
        if best.as_ref().map(|(_, b)| rn < *b).unwrap_or(true) {
            best = Some((z, rn));
        }
        if best.as_ref().unwrap().1 < 1e-11 {
            break;
        }
    }
    let (z, rn) = best.expect("at least one attempt");
    let (n1, n2) = build(&z);
    Ok((
        FloatWreathPoint {
            l,
            n,
            k,
            cprime: cprime.to_vec(),
            nabla1: n1,
            nabla2: n2,
        },
        rn,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmspace::point::kks_point;
    use crate::exact::scalar::int;

    #[test]
    fn trivial_group_dimension_count() {
        // Gamma = {1}, n = 2 at a diagonal normal-form point: expect 2n = 4
        let p = kks_point(&[int(0), int(1)], &[int(2), int(3)]).unwrap();
        let w = WreathPoint {
            l: 1,
            n: 2,
            k: int(1),
            cprime: vec![],
            nabla1: p.x.clone(),
            nabla2: p.y.clone(),
        };
        let f = FloatWreathPoint::from_exact(&w);
        let rep = moment_jacobian_report(&f).unwrap();
        assert_eq!(rep.reported_dim, 4, "{rep:?}");
        assert!(!rep.rank_deficient);
    }

    #[test]
    fn kleinian_dimension_count() {
        // Gamma = Z/2, n = 1: expect dimension 2
        let (w, rn) = newton_find_point(2, 1, 1.0, &[2.0], 7).unwrap();
        assert!(rn < 1e-9, "newton residual {rn}");
        let rep = moment_jacobian_report(&w).unwrap();
        assert_eq!(rep.reported_dim, 2, "{rep:?}");
    }

    #[test]
    fn degenerate_point_flagged() {
        // the fully collapsed pair at the origin: every direction is flat
        // and the dimension count comes out wrong, which is flagged
        let w = WreathPoint {
            l: 1,
            n: 2,
            k: int(0),
            cprime: vec![],
            nabla1: QMatrix::zeros(2, 2),
            nabla2: QMatrix::zeros(2, 2),
        };
        let f = FloatWreathPoint::from_exact(&w);
        let rep = moment_jacobian_report(&f).unwrap();
        assert!(rep.rank_deficient, "{rep:?}");
    }
}

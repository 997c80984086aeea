//! Membership test for the wreath-product matrix space: pairs of
//! equivariant endomorphisms whose commutator is `k |G| o (x) e_G +
//! Id (x) c'` with `o` in the shifted rank-one orbit.

use num_traits::Zero;

use super::point::rank_one_check;
use crate::error::{CherednikError, Result};
use crate::exact::scalar::{int, rat, Scalar};
use crate::groups::spec::GroupSpec;
use crate::linalg::QMatrix;

/// A candidate point of the wreath matrix space for Gamma = Z/l.
#[derive(Clone, Debug)]
pub struct WreathPoint {
    pub l: u32,
    pub n: usize,
    pub k: Scalar,
    /// class values c'_1..c'_{l-1} (the coefficient of gamma^j is c'_j)
    pub cprime: Vec<Scalar>,
    pub nabla1: QMatrix,
    pub nabla2: QMatrix,
}

/// Outcome of the membership test.
#[derive(Clone, Debug)]
pub struct MembershipReport {
    pub pass: bool,
    /// the extracted orbit element `o` when the structure matches
    pub orbit_part: Option<QMatrix>,
    /// human-readable reason on failure
    pub reason: Option<String>,
    /// the n = 1 case degenerates to a scalar equation and is flagged
    pub degenerate_rank_one: bool,
}

impl WreathPoint {
    pub fn dim(&self) -> usize {
        self.n * self.l as usize
    }

    /// The regular action of the cyclic generator on C^n (x) C[Z/l].
    pub fn gamma_action(&self) -> QMatrix {
        let l = self.l as usize;
        let d = self.dim();
        let mut m = QMatrix::zeros(d, d);
        for i in 0..self.n {
            for j in 0..l {
                m[(i * l + (j + 1) % l, i * l + j)] = int(1);
            }
        }
        m
    }

    /// Left multiplication by `c' = sum_j c'_j gamma^j` on C^n (x) C[Z/l].
    pub fn cprime_action(&self) -> QMatrix {
        let l = self.l as usize;
        let d = self.dim();
        let mut m = QMatrix::zeros(d, d);
        for i in 0..self.n {
            for (jidx, cj) in self.cprime.iter().enumerate() {
                let shift = jidx + 1;
                for j in 0..l {
                    m[(i * l + (j + shift) % l, i * l + j)] =
                        &m[(i * l + (j + shift) % l, i * l + j)] + cj;
                }
            }
        }
        m
    }

    /// The symmetrizer projector on the C[Z/l] factor (all entries 1/l).
    fn e_block(&self) -> QMatrix {
        let l = self.l as usize;
        QMatrix::from_fn(l, l, |_, _| rat(1, self.l as i64))
    }

    /// Checks the equivariance that couples the pair through the rational
    /// plane action: `rho(g) nabla_x rho(g)^{-1} = R00 nabla_1 + R10
    /// nabla_2` and similarly for the second slot.
    pub fn equivariance_check(&self) -> Result<bool> {
        let spec = GroupSpec::wreath(self.l, 1);
        let gam = crate::groups::element::GroupElement::color_gen(1, 0, 1, self.l);
        let act = spec.action_matrix(&gam)?; // 2x2 on the plane (x, y)
        let rho = self.gamma_action();
        let rho_inv = rho.inverse()?;
        let lhs1 = rho.mul_mat(&self.nabla1).mul_mat(&rho_inv);
        let rhs1 = &self.nabla1.scale(&act[(0, 0)]) + &self.nabla2.scale(&act[(1, 0)]);
        if lhs1 != rhs1 {
            return Ok(false);
        }
        let lhs2 = rho.mul_mat(&self.nabla2).mul_mat(&rho_inv);
        let rhs2 = &self.nabla1.scale(&act[(0, 1)]) + &self.nabla2.scale(&act[(1, 1)]);
        Ok(lhs2 == rhs2)
    }
}

/// Exact membership test; see the module docs for the target equation.
pub fn wreath_membership(w: &WreathPoint) -> Result<MembershipReport> {
    if w.cprime.len() + 1 != w.l as usize {
        return Err(CherednikError::Structure(format!(
            "expected {} color parameters, got {}",
            w.l - 1,
            w.cprime.len()
        )));
    }
    if !w.equivariance_check()? {
        return Err(CherednikError::Domain(
            "the pair is not equivariant for the cyclic action".into(),
        ));
    }
    let l = w.l as usize;
    let d = w.dim();
    let k_total = &w.k * &int(w.l as i64); // k |Gamma|
    let residual = &w.nabla1.commutator(&w.nabla2) - &w.cprime_action();

    if Zero::is_zero(&w.k) {
        let pass = residual.is_zero();
        return Ok(MembershipReport {
            pass,
            orbit_part: pass.then(|| QMatrix::zeros(w.n, w.n)),
            reason: (!pass).then(|| "nonzero residual with k = 0".to_string()),
            degenerate_rank_one: w.n == 1,
        });
    }

    // extract o from the block structure: block(i', i) = k |G| o_{i' i} E
    let e = w.e_block();
    let mut o = QMatrix::zeros(w.n, w.n);
    for bi in 0..w.n {
        for bj in 0..w.n {
            // use the (0,0) entry of the block: k |G| o_{bi bj} / l
            let val = residual[(bi * l, bj * l)].clone();
            o[(bi, bj)] = val * int(l as i64) / &k_total;
        }
    }
    // verify the reconstruction exactly
    let mut recon = QMatrix::zeros(d, d);
    for bi in 0..w.n {
        for bj in 0..w.n {
            let coeff = &o[(bi, bj)] * &k_total;
            for a in 0..l {
                for b in 0..l {
                    recon[(bi * l + a, bj * l + b)] = &coeff * &e[(a, b)];
                }
            }
        }
    }
    if recon != residual {
        return Ok(MembershipReport {
            pass: false,
            orbit_part: None,
            reason: Some("commutator is not of the form k|G| o (x) e_G + Id (x) c'".into()),
            degenerate_rank_one: w.n == 1,
        });
    }
    // o must lie in the orbit: traceless, with o + Id of rank one (the
    // rank-one matrix o + Id automatically being semisimple since its
    // trace is n != 0); for n = 1 the orbit degenerates to {0}.
    if w.n == 1 {
        let pass = Zero::is_zero(&o[(0, 0)]);
        return Ok(MembershipReport {
            pass,
            orbit_part: Some(o),
            reason: (!pass).then(|| "size-one case requires o = 0".to_string()),
            degenerate_rank_one: true,
        });
    }
    if !Zero::is_zero(&o.trace()) {
        return Ok(MembershipReport {
            pass: false,
            orbit_part: Some(o),
            reason: Some("orbit part has nonzero trace".into()),
            degenerate_rank_one: false,
        });
    }
    let zero = QMatrix::zeros(w.n, w.n);
    let shifted_ok = {
        // rank_one_check works on [X, Y] + Id; feed X = o-as-commutator via
        // direct rank computation instead
        let m = &o + &QMatrix::identity(w.n);
        m.rank() == 1
    };
    let _ = zero;
    if !shifted_ok {
        return Ok(MembershipReport {
            pass: false,
            orbit_part: Some(o),
            reason: Some("o + Id does not have rank one".into()),
            degenerate_rank_one: false,
        });
    }
    Ok(MembershipReport {
        pass: true,
        orbit_part: Some(o),
        reason: None,
        degenerate_rank_one: false,
    })
}

/// The trivial-group specialization: `[X, Y] = k o` with `o + Id` of rank
/// one and `o` traceless, i.e. the plain rank-one condition after the
/// k-rescaling of Y.
pub fn trivial_group_membership(x: &QMatrix, y: &QMatrix, k: &Scalar) -> bool {
    if Zero::is_zero(k) {
        return x.commutator(y).is_zero();
    }
    let scaled_y = y.scale(&(int(1) / k));
    rank_one_check(x, &scaled_y).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The explicit size-two solution for Gamma = Z/2, n = 1:
    /// [n1, n2] = c' gamma with anticommuting swap-equivariance.
    fn kleinian_point(cp: Scalar) -> WreathPoint {
        // nabla = [[a, b], [-b, -a]] satisfies rho nabla rho^{-1} = -nabla
        let a1 = int(1);
        let b1 = int(0);
        let a2 = int(0);
        // [n1, n2] = [[0, c],[c, 0]] requires 2(a1 b2 - b1 a2) = c
        let b2 = cp.clone() / int(2) / &a1;
        let n1 = QMatrix::from_rows(vec![vec![a1.clone(), b1.clone()], vec![-&b1, -&a1]]);
        let n2 = QMatrix::from_rows(vec![vec![a2.clone(), b2.clone()], vec![-&b2, -&a2]]);
        WreathPoint {
            l: 2,
            n: 1,
            k: int(1),
            cprime: vec![cp],
            nabla1: n1,
            nabla2: n2,
        }
    }

    #[test]
    fn kleinian_size_one_passes() {
        let w = kleinian_point(int(2));
        assert!(w.equivariance_check().unwrap());
        let rep = wreath_membership(&w).unwrap();
        assert!(rep.pass, "reason: {:?}", rep.reason);
        assert!(rep.degenerate_rank_one);
    }

    #[test]
    fn random_non_solution_fails() {
        let mut w = kleinian_point(int(2));
        // break the commutator structure but keep equivariance:
        // claim a different c'
        w.cprime = vec![int(3)];
        let rep = wreath_membership(&w).unwrap();
        assert!(!rep.pass);
        assert!(rep.reason.is_some());
    }

    #[test]
    fn non_equivariant_rejected() {
        let mut w = kleinian_point(int(2));
        w.nabla1 = QMatrix::from_rows(vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
        assert!(wreath_membership(&w).is_err());
    }

    #[test]
    fn trivial_group_reduction() {
        use super::super::point::kks_point;
        use crate::exact::scalar::int;
        let p = kks_point(&[int(0), int(1), int(3)], &[int(2), int(-1), int(4)]).unwrap();
        assert!(trivial_group_membership(&p.x, &p.y, &int(1)));
        let d1 = QMatrix::diagonal(&[int(1), int(2), int(3)]);
        let d2 = QMatrix::diagonal(&[int(4), int(5), int(6)]);
        assert!(!trivial_group_membership(&d1, &d2, &int(1)));
    }
}

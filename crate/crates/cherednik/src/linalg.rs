//! Exact dense matrices over a field, with fraction-free-style elimination
//! done over the field directly (exact division, no rounding).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{CherednikError, Result};
use crate::exact::scalar::Scalar;
use crate::field::Field;

/// Dense matrix over an exact field.
#[derive(Clone, PartialEq)]
pub struct Mat<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Matrices over the rationals, the workhorse instance.
pub type QMatrix = Mat<Scalar>;

impl<F: Field> Mat<F> {
    pub fn filled(rows: usize, cols: usize, value: F) -> Self {
        Mat {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn zero_like(rows: usize, cols: usize, sample: &F) -> Self {
        Mat::filled(rows, cols, sample.zero())
    }

    pub fn identity_like(n: usize, sample: &F) -> Self {
        let mut m = Mat::zero_like(n, n, sample);
        for i in 0..n {
            m[(i, i)] = sample.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> F {
        assert!(self.is_square());
        let mut t = self.data[0].zero();
        for i in 0..self.rows {
            t = t.add(&self[(i, i)]);
        }
        t
    }

    pub fn scale(&self, c: &F) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.mul(c)).collect(),
        }
    }

    pub fn mul_mat(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Mat::zero_like(self.rows, rhs.cols, &self.data[0]);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let p = a.mul(b);
                    out[(i, j)] = out[(i, j)].add(&p);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.data[0].zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc.add(&self[(i, j)].mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        &self.mul_mat(rhs) - &rhs.mul_mat(self)
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].mul(&inv);
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let adj = f.mul(&m[(r, j)]);
                        m[(i, j)] = m[(i, j)].sub(&adj);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of the null space (column vectors).
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let zero = self.data.first().map(|x| x.zero());
        let Some(zero) = zero else {
            return Vec::new();
        };
        let mut basis = Vec::new();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![zero.clone(); self.cols];
            v[free] = zero.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = r[(row, free)].neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = b`; `None` when inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Mat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        aug = r;
        let zero = b.first().map(|x| x.zero()).unwrap_or_else(|| {
            self.data
                .first()
                .map(|x| x.zero())
                .expect("nonempty system")
        });
        let mut x = vec![zero; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[(row, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = Mat::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                self.data[0].one()
            } else {
                self.data[0].zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(CherednikError::Domain("singular matrix".into()));
        }
        Ok(Mat::from_fn(n, n, |i, j| r[(i, j + n)].clone()))
    }

    pub fn conjugate_by(&self, g: &Self) -> Result<Self> {
        let gi = g.inverse()?;
        Ok(gi.mul_mat(self).mul_mat(g))
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        let mut out = Mat::identity_like(self.rows, &self.data[0]);
        for _ in 0..e {
            out = out.mul_mat(self);
        }
        out
    }

    /// Characteristic polynomial coefficients (constant term first) by the
    /// Faddeev-LeVerrier recursion; exact over the field.
    pub fn char_poly(&self) -> Vec<F> {
        assert!(self.is_square());
        let n = self.rows;
        let one = self.data[0].one();
        let mut coeffs = vec![self.data[0].zero(); n + 1];
        coeffs[n] = one.clone();
        let mut m = Mat::identity_like(n, &self.data[0]);
        let mut inv_k = one.clone();
        for k in 1..=n {
            m = self.mul_mat(&m);
            // c_{n-k} = -tr(A * M_{k-1}) / k
            let mut kf = self.data[0].zero();
            for _ in 0..k {
                kf = kf.add(&one);
            }
            inv_k = kf.inv();
            let c = m.trace().mul(&inv_k).neg();
            coeffs[n - k] = c.clone();
            for i in 0..n {
                m[(i, i)] = m[(i, i)].add(&c);
            }
        }
        let _ = inv_k;
        coeffs
    }

    /// Kronecker (tensor) product.
    pub fn kron(&self, rhs: &Self) -> Self {
        Mat::from_fn(
            self.rows * rhs.rows,
            self.cols * rhs.cols,
            |i, j| {
                let (ia, ib) = (i / rhs.rows, i % rhs.rows);
                let (ja, jb) = (j / rhs.cols, j % rhs.cols);
                self[(ia, ja)].mul(&rhs[(ib, jb)])
            },
        )
    }

    /// Writes the rows one under another into a single vector.
    pub fn flatten(&self) -> Vec<F> {
        self.data.clone()
    }

    pub fn is_upper_triangular(&self) -> bool {
        for i in 0..self.rows {
            for j in 0..i.min(self.cols) {
                if !self[(i, j)].is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

impl QMatrix {
    pub fn identity(n: usize) -> Self {
        Mat::identity_like(n, &Scalar::from_integer(0.into()))
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat::zero_like(rows, cols, &Scalar::from_integer(0.into()))
    }

    pub fn diagonal(d: &[Scalar]) -> Self {
        let mut m = QMatrix::zeros(d.len(), d.len());
        for (i, v) in d.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    /// Rank-one factorization `self = u * v^T`; `None` when rank != 1.
    pub fn rank_one_factor(&self) -> Option<(Vec<Scalar>, Vec<Scalar>)> {
        if self.rank() != 1 {
            return None;
        }
        let i0 = (0..self.rows).find(|&i| self.row(i).iter().any(|x| !Field::is_zero(x)))?;
        let v: Vec<Scalar> = self.row(i0).to_vec();
        let j0 = (0..self.cols).find(|&j| !Field::is_zero(&v[j]))?;
        let pivot = v[j0].clone();
        let u: Vec<Scalar> = (0..self.rows)
            .map(|i| &self[(i, j0)] / &pivot)
            .collect();
        Some((u, v))
    }

    pub fn to_f64(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.rows, self.cols, |i, j| {
            let c = &self[(i, j)];
            let n: f64 = c.numer().to_string().parse().unwrap_or(f64::NAN);
            let d: f64 = c.denom().to_string().parse().unwrap_or(f64::NAN);
            n / d
        })
    }
}

impl<F: Field> std::ops::Index<(usize, usize)> for Mat<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> std::ops::IndexMut<(usize, usize)> for Mat<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> Add for &Mat<F> {
    type Output = Mat<F>;
    fn add(self, rhs: &Mat<F>) -> Mat<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }
}

impl<F: Field> Sub for &Mat<F> {
    type Output = Mat<F>;
    fn sub(self, rhs: &Mat<F>) -> Mat<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }
}

impl<F: Field> Mul for &Mat<F> {
    type Output = Mat<F>;
    fn mul(self, rhs: &Mat<F>) -> Mat<F> {
        self.mul_mat(rhs)
    }
}

impl<F: Field> Neg for &Mat<F> {
    type Output = Mat<F>;
    fn neg(self) -> Mat<F> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.neg()).collect(),
        }
    }
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Row-reduces `vectors` into an independent echelon basis; returns the basis.
pub fn echelon_basis<F: Field>(vectors: Vec<Vec<F>>) -> Vec<Vec<F>> {
    let mut basis: Vec<(usize, Vec<F>)> = Vec::new(); // (pivot index, vector)
    for mut v in vectors {
        for (p, b) in &basis {
            if !v[*p].is_zero() {
                let f = v[*p].mul(&b[*p].inv());
                for j in 0..v.len() {
                    let adj = f.mul(&b[j]);
                    v[j] = v[j].sub(&adj);
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            basis.push((p, v));
            basis.sort_by_key(|(p, _)| *p);
        }
    }
    basis.into_iter().map(|(_, v)| v).collect()
}

/// Dimension of the span of `vectors`.
pub fn span_dim<F: Field>(vectors: Vec<Vec<F>>) -> usize {
    echelon_basis(vectors).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{int, rat};

    #[test]
    fn rank_and_kernel() {
        let m = QMatrix::from_rows(vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
            vec![int(1), int(0), int(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| Field::is_zero(x)));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = QMatrix::from_rows(vec![
            vec![int(2), int(1)],
            vec![int(7), int(4)],
        ]);
        let mi = m.inverse().unwrap();
        assert_eq!(m.mul_mat(&mi), QMatrix::identity(2));
    }

    #[test]
    fn rank_one_factorization() {
        let m = QMatrix::from_rows(vec![
            vec![int(2), int(4)],
            vec![int(3), int(6)],
        ]);
        let (u, v) = m.rank_one_factor().unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m[(i, j)], &u[i] * &v[j]);
            }
        }
        assert!(QMatrix::identity(2).rank_one_factor().is_none());
    }

    #[test]
    fn char_poly_of_diagonal() {
        let m = QMatrix::diagonal(&[int(1), int(2)]);
        // (x-1)(x-2) = 2 - 3x + x^2
        assert_eq!(m.char_poly(), vec![int(2), int(-3), int(1)]);
        let _ = rat(1, 2);
    }

    #[test]
    fn echelon_span() {
        let v1 = vec![int(1), int(1), int(0)];
        let v2 = vec![int(2), int(2), int(0)];
        let v3 = vec![int(0), int(1), int(1)];
        assert_eq!(span_dim(vec![v1, v2, v3]), 2);
    }
}

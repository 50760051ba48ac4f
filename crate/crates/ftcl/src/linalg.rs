//! Small dense linear algebra for the estimation pipeline.
//!
//! Everything in this crate works with matrices of order p+q (three to ten in
//! the reference experiments), so the implementations favor simplicity over
//! asymptotics: row-major storage, cyclic Jacobi sweeps for symmetric
//! eigenvalues, Gaussian elimination for the one least-squares solve.

use crate::error::{Error, Result};

/// Dense row-major matrix of `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Builds from nested rows; panics on ragged input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Mat { rows: r, cols: c, data }
    }

    /// Column vector from a slice.
    pub fn column(v: &[f64]) -> Self {
        Mat { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// `A v`
    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![0.0; self.rows];
        for i in 0..self.rows {
            let mut acc = 0.0;
            for j in 0..self.cols {
                acc += self.get(i, j) * v[j];
            }
            out[i] = acc;
        }
        out
    }

    /// `Aᵀ v`
    pub fn tr_mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0.0; self.cols];
        for j in 0..self.cols {
            let mut acc = 0.0;
            for i in 0..self.rows {
                acc += self.get(i, j) * v[i];
            }
            out[j] = acc;
        }
        out
    }

    /// `A += s · u vᵀ`
    pub fn add_outer(&mut self, u: &[f64], v: &[f64], s: f64) {
        assert_eq!(u.len(), self.rows);
        assert_eq!(v.len(), self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                self.data[i * self.cols + j] += s * u[i] * v[j];
            }
        }
    }

    /// `A += s B`
    pub fn add_scaled(&mut self, other: &Mat, s: f64) {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        for (a, b) in self.data.iter_mut().zip(other.data.iter()) {
            *a += s * b;
        }
    }

    pub fn fro_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Induced 2-norm (largest singular value), via the symmetric
    /// eigenproblem of `AᵀA`.
    pub fn induced_2_norm(&self) -> f64 {
        let n = self.cols;
        let mut gram = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0.0;
                for k in 0..self.rows {
                    acc += self.get(k, i) * self.get(k, j);
                }
                gram.set(i, j, acc);
            }
        }
        let (_, lam_max) = sym_eig_extremes(&gram).expect("gram matrix is symmetric");
        lam_max.max(0.0).sqrt()
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// `a += s b`
pub fn axpy(a: &mut [f64], b: &[f64], s: f64) {
    debug_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter_mut().zip(b) {
        *x += s * y;
    }
}

pub fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

/// Extreme eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps continue until the off-diagonal Frobenius norm drops below
/// `1e-12 · ‖S‖_F`. Inputs with asymmetry above `1e-9` are rejected.
pub fn sym_eig_extremes(s: &Mat) -> Result<(f64, f64)> {
    let evs = sym_eigenvalues(s)?;
    let lam_min = evs.iter().cloned().fold(f64::INFINITY, f64::min);
    let lam_max = evs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Ok((lam_min, lam_max))
}

/// All eigenvalues of a symmetric matrix (unordered), cyclic Jacobi.
pub fn sym_eigenvalues(s: &Mat) -> Result<Vec<f64>> {
    let n = s.rows();
    if n != s.cols() {
        return Err(Error::DimensionMismatch { expected: n, got: s.cols(), what: "sym_eigenvalues" });
    }
    let mut asym: f64 = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            asym = asym.max((s.get(i, j) - s.get(j, i)).abs());
        }
    }
    if asym > 1e-9 {
        return Err(Error::NotSymmetric { asymmetry: asym });
    }
    if n == 0 {
        return Ok(vec![]);
    }
    if n == 1 {
        return Ok(vec![s.get(0, 0)]);
    }

    let mut a = s.clone();
    // symmetrize exactly so rotations preserve symmetry bit-for-bit
    for i in 0..n {
        for j in (i + 1)..n {
            let v = 0.5 * (a.get(i, j) + a.get(j, i));
            a.set(i, j, v);
            a.set(j, i, v);
        }
    }
    let tol = 1e-12 * a.fro_norm();
    let off = |a: &Mat| -> f64 {
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    acc += a.get(i, j) * a.get(i, j);
                }
            }
        }
        acc.sqrt()
    };
    let mut sweeps = 0;
    while off(&a) > tol && sweeps < 50 {
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                // rotation angle from the standard Jacobi formulas
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let sn = t * c;
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, c * akp - sn * akq);
                    a.set(k, q, sn * akp + c * akq);
                }
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, c * apk - sn * aqk);
                    a.set(q, k, sn * apk + c * aqk);
                }
            }
        }
        sweeps += 1;
    }
    Ok((0..n).map(|i| a.get(i, i)).collect())
}

/// Solves `A x = b` for square `A` by Gaussian elimination with partial
/// pivoting. Used for the small normal-equation solves when fitting optimal
/// parameters on a grid.
pub fn solve(a: &Mat, b: &[f64]) -> Result<Vec<f64>> {
    let n = a.rows();
    if a.cols() != n || b.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: b.len(), what: "solve" });
    }
    let mut m = a.clone();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let mut piv = col;
        for r in (col + 1)..n {
            if m.get(r, col).abs() > m.get(piv, col).abs() {
                piv = r;
            }
        }
        if m.get(piv, col).abs() < 1e-300 {
            return Err(Error::Domain { what: "solve", detail: "singular matrix".into() });
        }
        if piv != col {
            for j in 0..n {
                let tmp = m.get(col, j);
                m.set(col, j, m.get(piv, j));
                m.set(piv, j, tmp);
            }
            rhs.swap(col, piv);
        }
        let d = m.get(col, col);
        for r in (col + 1)..n {
            let factor = m.get(r, col) / d;
            if factor == 0.0 {
                continue;
            }
            for j in col..n {
                let v = m.get(r, j) - factor * m.get(col, j);
                m.set(r, j, v);
            }
            rhs[r] -= factor * rhs[col];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut acc = rhs[i];
        for j in (i + 1)..n {
            acc -= m.get(i, j) * x[j];
        }
        x[i] = acc / m.get(i, i);
    }
    Ok(x)
}

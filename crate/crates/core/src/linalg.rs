//! Small dense linear algebra: row-major matrices, Householder QR and Cholesky.
//!
//! Sizes in this crate are tiny (a few hundred rows, a handful of columns), so
//! everything is plain loops over a `Vec`.

use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds from row-major data. Panics if `data.len() != rows * cols`.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Self { rows: rows.len(), cols, data }
    }

    pub fn from_columns(columns: &[Vec<T>]) -> Self {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged columns");
            for (i, &v) in c.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &Matrix<T>) -> Self {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a == T::zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] = out[(i, j)] + a * rhs[(l, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows).map(|i| crate::scalar::dot(self.row(i), v)).collect()
    }

    pub fn scale(&self, c: T) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| x * c).collect() }
    }

    /// Rows `start..end` as a new matrix.
    pub fn row_block(&self, start: usize, end: usize) -> Self {
        Self {
            rows: end - start,
            cols: self.cols,
            data: self.data[start * self.cols..end * self.cols].to_vec(),
        }
    }

    /// Appends a column on the right.
    pub fn with_column(&self, column: &[T]) -> Self {
        assert_eq!(column.len(), self.rows);
        let mut out = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)];
            }
            out[(i, self.cols)] = column[i];
        }
        out
    }

    /// `AᵀA`.
    pub fn gram(&self) -> Self {
        let mut g = Self::zeros(self.cols, self.cols);
        for r in 0..self.rows {
            let row = self.row(r);
            for i in 0..self.cols {
                for j in i..self.cols {
                    g[(i, j)] = g[(i, j)] + row[i] * row[j];
                }
            }
        }
        for i in 0..self.cols {
            for j in 0..i {
                g[(i, j)] = g[(j, i)];
            }
        }
        g
    }

    pub fn is_symmetric(&self, tol: T) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| (self[(i, j)] - self[(j, i)]).abs() <= tol))
    }

    pub fn max_abs_diff(&self, other: &Matrix<T>) -> T {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a - b).abs())
            .fold(T::zero(), T::max)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Householder QR of a tall matrix, `A = QR`.
///
/// Q is kept implicitly as the sequence of reflectors.
#[derive(Debug, Clone)]
pub struct Qr<T> {
    /// Packed factor: upper triangle holds R, reflector tails live below the diagonal.
    packed: Matrix<T>,
    /// Leading entry of each reflector (the part that would sit on the diagonal).
    heads: Vec<T>,
    /// Reflector scaling `2 / (vᵀv)`.
    betas: Vec<T>,
}

impl<T: Scalar> Qr<T> {
    /// Factorizes `a` (rows ≥ cols). Fails with [`Error::Collinear`] naming the first
    /// column whose diagonal entry of R vanishes relative to the largest one.
    pub fn new(a: &Matrix<T>) -> Result<Self> {
        let (m, n) = (a.rows(), a.cols());
        if m < n {
            return Err(Error::InsufficientObservations { needed: n, available: m });
        }
        let mut packed = a.clone();
        let mut heads = Vec::with_capacity(n);
        let mut betas = Vec::with_capacity(n);
        let col_norms: Vec<T> = (0..n)
            .map(|j| (0..m).map(|i| a[(i, j)] * a[(i, j)]).sum::<T>().sqrt())
            .collect();

        for k in 0..n {
            let norm = (k..m).map(|i| packed[(i, k)] * packed[(i, k)]).sum::<T>().sqrt();
            let x0 = packed[(k, k)];
            let alpha = if x0 >= T::zero() { -norm } else { norm };
            let head = x0 - alpha;
            let vtv = head * head + (k + 1..m).map(|i| packed[(i, k)] * packed[(i, k)]).sum::<T>();
            let beta = if vtv > T::zero() { T::lit(2.0) / vtv } else { T::zero() };

            for j in k + 1..n {
                let mut s = head * packed[(k, j)];
                for i in k + 1..m {
                    s = s + packed[(i, k)] * packed[(i, j)];
                }
                let s = s * beta;
                packed[(k, j)] = packed[(k, j)] - s * head;
                for i in k + 1..m {
                    packed[(i, j)] = packed[(i, j)] - s * packed[(i, k)];
                }
            }
            packed[(k, k)] = if beta > T::zero() { alpha } else { x0 };
            heads.push(head);
            betas.push(beta);
        }

        let qr = Self { packed, heads, betas };
        let tol = T::count(m.max(n)) * T::epsilon() * T::lit(16.0);
        for (j, &cn) in col_norms.iter().enumerate() {
            let r = qr.packed[(j, j)].abs();
            if cn == T::zero() || r <= tol * cn {
                return Err(Error::Collinear { column: j });
            }
        }
        Ok(qr)
    }

    pub fn rows(&self) -> usize {
        self.packed.rows()
    }

    pub fn cols(&self) -> usize {
        self.packed.cols()
    }

    /// Computes `Qᵀb`.
    pub fn qt_mul(&self, b: &[T]) -> Vec<T> {
        let (m, n) = (self.rows(), self.cols());
        assert_eq!(b.len(), m);
        let mut y = b.to_vec();
        for k in 0..n {
            let beta = self.betas[k];
            if beta == T::zero() {
                continue;
            }
            let mut s = self.heads[k] * y[k];
            for i in k + 1..m {
                s = s + self.packed[(i, k)] * y[i];
            }
            let s = s * beta;
            y[k] = y[k] - s * self.heads[k];
            for i in k + 1..m {
                y[i] = y[i] - s * self.packed[(i, k)];
            }
        }
        y
    }

    /// Least-squares solution of `Ax ≈ b`.
    pub fn solve(&self, b: &[T]) -> Vec<T> {
        let n = self.cols();
        let qtb = self.qt_mul(b);
        let mut x = vec![T::zero(); n];
        for i in (0..n).rev() {
            let mut s = qtb[i];
            for j in i + 1..n {
                s = s - self.packed[(i, j)] * x[j];
            }
            x[i] = s / self.packed[(i, i)];
        }
        x
    }

    /// `R⁻¹` (upper triangular).
    pub fn r_inverse(&self) -> Matrix<T> {
        let n = self.cols();
        let mut inv = Matrix::zeros(n, n);
        for col in 0..n {
            for i in (0..=col).rev() {
                let mut s = if i == col { T::one() } else { T::zero() };
                for j in i + 1..=col {
                    s = s - self.packed[(i, j)] * inv[(j, col)];
                }
                inv[(i, col)] = s / self.packed[(i, i)];
            }
        }
        inv
    }

    /// `(AᵀA)⁻¹ = R⁻¹R⁻ᵀ`.
    pub fn gram_inverse(&self) -> Matrix<T> {
        let rinv = self.r_inverse();
        let n = self.cols();
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut s = T::zero();
                for l in j..n {
                    s = s + rinv[(i, l)] * rinv[(j, l)];
                }
                out[(i, j)] = s;
                out[(j, i)] = s;
            }
        }
        out
    }
}

/// Lower Cholesky factor `L` with `A = LLᵀ`; `None` unless `a` is symmetric positive definite.
pub fn cholesky<T: Scalar>(a: &Matrix<T>) -> Option<Matrix<T>> {
    let n = a.rows();
    if n != a.cols() {
        return None;
    }
    let scale = a.diagonal().into_iter().fold(T::zero(), T::max);
    let tol = scale * T::epsilon() * T::count(n);
    let mut l = Matrix::zeros(n, n);
    for j in 0..n {
        let mut d = a[(j, j)];
        for k in 0..j {
            d = d - l[(j, k)] * l[(j, k)];
        }
        if !(d > tol) {
            return None;
        }
        let djj = d.sqrt();
        l[(j, j)] = djj;
        for i in j + 1..n {
            let mut s = a[(i, j)];
            for k in 0..j {
                s = s - l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = s / djj;
        }
    }
    Some(l)
}

/// Solves `Lx = b` for lower-triangular `L`.
pub fn forward_substitute<T: Scalar>(l: &Matrix<T>, b: &[T]) -> Vec<T> {
    let n = l.rows();
    assert_eq!(b.len(), n);
    let mut x = vec![T::zero(); n];
    for i in 0..n {
        let mut s = b[i];
        for j in 0..i {
            s = s - l[(i, j)] * x[j];
        }
        x[i] = s / l[(i, i)];
    }
    x
}

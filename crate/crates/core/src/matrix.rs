//! Dense row-major matrices over a [`Float`] scalar.
//!
//! The layout convention is fixed once for the whole crate: a matrix is
//! `rows x cols`, stored row-major, and a row is one sample. A batch forward
//! pass through a layer with weights `W (d_out x d_in)` is then a single
//! [`Matrix::matmul_nt`] (`X * W^T`) over contiguous rows of both operands.

use crate::error::{Error, Result};
use crate::num::Float;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Float> Matrix<T> {
    /// All-zeros matrix. `rows` and `cols` must be positive.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn filled(rows: usize, cols: usize, v: T) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Matrix {
            rows,
            cols,
            data: vec![v; rows * cols],
        }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols || rows == 0 || cols == 0 {
            return Err(Error::invalid(
                "from_vec",
                format!(
                    "data length {} does not fill a {}x{} matrix",
                    data.len(),
                    rows,
                    cols
                ),
            ));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Build from nested rows; handy in tests.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::invalid("from_rows", "ragged or empty row list"));
        }
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            data.extend_from_slice(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn numel(&self) -> usize {
        self.data.len()
    }

    #[inline]
    pub fn data(&self) -> &[T] {
        &self.data
    }

    #[inline]
    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> T {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    /// `self * other`, the standard matrix product.
    pub fn matmul(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.rows {
            return Err(self.dim_mismatch("matmul", other));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        // i-k-j loop: the inner update runs over contiguous rows of `other`
        // and `out`, which vectorizes well.
        for i in 0..self.rows {
            let a_row = self.row(i);
            let out_row = out.row_mut(i);
            for (k, &a_ik) in a_row.iter().enumerate() {
                let b_row = other.row(k);
                for (o, &b) in out_row.iter_mut().zip(b_row) {
                    *o += a_ik * b;
                }
            }
        }
        Ok(out)
    }

    /// `self * other^T`. Both operands are walked along contiguous rows.
    pub fn matmul_nt(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.cols {
            return Err(self.dim_mismatch("matmul_nt", other));
        }
        let mut out = Matrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            let a_row = self.row(i);
            let out_row = out.row_mut(i);
            for (j, o) in out_row.iter_mut().enumerate() {
                *o = dot(a_row, other.row(j));
            }
        }
        Ok(out)
    }

    /// `self^T * other`, accumulated row by row (axpy form).
    pub fn matmul_tn(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.rows != other.rows {
            return Err(self.dim_mismatch("matmul_tn", other));
        }
        let mut out = Matrix::zeros(self.cols, other.cols);
        for t in 0..self.rows {
            let a_row = self.row(t);
            let b_row = other.row(t);
            for (i, &a_ti) in a_row.iter().enumerate() {
                let out_row = out.row_mut(i);
                for (o, &b) in out_row.iter_mut().zip(b_row) {
                    *o += a_ti * b;
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix<T> {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        out
    }

    /// Raise every entry to the `i`-th power; `i = 0` yields the all-ones
    /// matrix (including for zero entries).
    pub fn elementwise_pow(&self, i: u32) -> Matrix<T> {
        if i == 0 {
            return Matrix::filled(self.rows, self.cols, T::one());
        }
        self.map(|x| x.powi(i as i32))
    }

    /// Add `v` to every row. `v.len()` must equal the column count.
    pub fn add_row_broadcast(&self, v: &[T]) -> Result<Matrix<T>> {
        if v.len() != self.cols {
            return Err(Error::invalid(
                "add_row_broadcast",
                format!("vector length {} != column count {}", v.len(), self.cols),
            ));
        }
        let mut out = self.clone();
        for i in 0..out.rows {
            for (o, &b) in out.row_mut(i).iter_mut().zip(v) {
                *o += b;
            }
        }
        Ok(out)
    }

    /// Arithmetic mean over all entries.
    pub fn mean_all(&self) -> Result<T> {
        if self.data.is_empty() {
            return Err(Error::EmptyMatrix { op: "mean_all" });
        }
        let sum: T = self.data.iter().copied().sum();
        Ok(sum / crate::num::cast(self.data.len() as f64))
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn zip_map(&self, other: &Matrix<T>, f: impl Fn(T, T) -> T) -> Result<Matrix<T>> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.dim_mismatch("zip_map", other));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn add(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        self.zip_map(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        self.zip_map(other, |a, b| a - b)
    }

    pub fn hadamard(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        self.zip_map(other, |a, b| a * b)
    }

    pub fn scale(&self, s: T) -> Matrix<T> {
        self.map(|x| x * s)
    }

    /// Column sums as a vector of length `cols`.
    pub fn col_sums(&self) -> Vec<T> {
        let mut out = vec![T::zero(); self.cols];
        for i in 0..self.rows {
            for (o, &x) in out.iter_mut().zip(self.row(i)) {
                *o += x;
            }
        }
        out
    }

    /// Squared Euclidean norm of each row.
    pub fn row_sq_norms(&self) -> Vec<T> {
        (0..self.rows).map(|i| dot(self.row(i), self.row(i))).collect()
    }

    /// Copy the given rows (in order) into a new matrix.
    pub fn gather_rows(&self, indices: &[usize]) -> Result<Matrix<T>> {
        if indices.is_empty() {
            return Err(Error::EmptyMatrix { op: "gather_rows" });
        }
        let mut data = Vec::with_capacity(indices.len() * self.cols);
        for &i in indices {
            if i >= self.rows {
                return Err(Error::invalid(
                    "gather_rows",
                    format!("row index {} out of bounds for {} rows", i, self.rows),
                ));
            }
            data.extend_from_slice(self.row(i));
        }
        Ok(Matrix {
            rows: indices.len(),
            cols: self.cols,
            data,
        })
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    fn dim_mismatch(&self, op: &'static str, other: &Matrix<T>) -> Error {
        Error::DimMismatch {
            op,
            lhs_rows: self.rows,
            lhs_cols: self.cols,
            rhs_rows: other.rows,
            rhs_cols: other.cols,
        }
    }
}

/// Dot product of two equal-length slices, unrolled into four independent
/// accumulators so the compiler can keep vector lanes busy. The summation
/// order is fixed, so results are bit-stable run to run.
#[inline]
pub fn dot<T: Float>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    let chunks = a.len() / 4;
    let (mut s0, mut s1, mut s2, mut s3) = (T::zero(), T::zero(), T::zero(), T::zero());
    for c in 0..chunks {
        let i = c * 4;
        s0 = s0 + a[i] * b[i];
        s1 = s1 + a[i + 1] * b[i + 1];
        s2 = s2 + a[i + 2] * b[i + 2];
        s3 = s3 + a[i + 3] * b[i + 3];
    }
    let mut tail = T::zero();
    for i in chunks * 4..a.len() {
        tail = tail + a[i] * b[i];
    }
    ((s0 + s1) + (s2 + s3)) + tail
}

#[cfg(test)]
mod tests {
    use super::*;

    type Mat = Matrix<f64>;

    #[test]
    fn matmul_identity() {
        let a = Mat::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let got = Mat::identity(2).matmul(&a).unwrap();
        assert_eq!(got, a);
    }

    #[test]
    fn matmul_hand_example() {
        let a = Mat::from_rows(&[vec![1.0, 2.0]]).unwrap();
        let b = Mat::from_rows(&[vec![3.0], vec![4.0]]).unwrap();
        let got = a.matmul(&b).unwrap();
        assert_eq!(got.data(), &[11.0]);
    }

    #[test]
    fn matmul_rejects_mismatch() {
        let a = Mat::zeros(2, 3);
        let b = Mat::zeros(2, 3);
        let err = a.matmul(&b).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("2x3"), "error should report shapes: {msg}");
    }

    #[test]
    fn matmul_matches_triple_loop_oracle() {
        let mut rng = crate::rng::RngStream::new(42);
        let a: Mat = rng.uniform_matrix(-1.0, 1.0, 5, 4).unwrap();
        let b: Mat = rng.uniform_matrix(-1.0, 1.0, 4, 3).unwrap();
        let got = a.matmul(&b).unwrap();
        for i in 0..5 {
            for j in 0..3 {
                let mut want = 0.0;
                for k in 0..4 {
                    want += a.at(i, k) * b.at(k, j);
                }
                assert!((got.at(i, j) - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn matmul_variants_agree_with_explicit_transpose() {
        let mut rng = crate::rng::RngStream::new(7);
        let a: Mat = rng.uniform_matrix(-1.0, 1.0, 3, 5).unwrap();
        let b: Mat = rng.uniform_matrix(-1.0, 1.0, 4, 5).unwrap();
        let nt = a.matmul_nt(&b).unwrap();
        let want = a.matmul(&b.transpose()).unwrap();
        for (x, y) in nt.data().iter().zip(want.data()) {
            assert!((x - y).abs() < 1e-12);
        }

        let c: Mat = rng.uniform_matrix(-1.0, 1.0, 5, 3).unwrap();
        let d: Mat = rng.uniform_matrix(-1.0, 1.0, 5, 2).unwrap();
        let tn = c.matmul_tn(&d).unwrap();
        let want = c.transpose().matmul(&d).unwrap();
        for (x, y) in tn.data().iter().zip(want.data()) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn pow_zero_is_ones_and_squares_work() {
        let a = Mat::from_rows(&[vec![2.0, 3.0]]).unwrap();
        assert_eq!(a.elementwise_pow(0).data(), &[1.0, 1.0]);
        assert_eq!(a.elementwise_pow(2).data(), &[4.0, 9.0]);
        let b = Mat::from_rows(&[vec![0.5]]).unwrap();
        assert!((b.elementwise_pow(3).at(0, 0) - 0.125).abs() < 1e-15);
        // 0^0 = 1 by convention
        let z = Mat::zeros(1, 1);
        assert_eq!(z.elementwise_pow(0).at(0, 0), 1.0);
    }

    #[test]
    fn row_broadcast() {
        let a = Mat::from_rows(&[vec![1.0, 1.0], vec![2.0, 2.0]]).unwrap();
        let got = a.add_row_broadcast(&[0.0, 1.0]).unwrap();
        assert_eq!(got.data(), &[1.0, 2.0, 2.0, 3.0]);
        assert_eq!(a.add_row_broadcast(&[0.0, 0.0]).unwrap(), a);
        assert!(a.add_row_broadcast(&[1.0]).is_err());

        // row-loop oracle on a random matrix
        let mut rng = crate::rng::RngStream::new(3);
        let m: Mat = rng.uniform_matrix(-2.0, 2.0, 3, 2).unwrap();
        let v = [0.25, -0.5];
        let got = m.add_row_broadcast(&v).unwrap();
        for i in 0..3 {
            for j in 0..2 {
                assert_eq!(got.at(i, j), m.at(i, j) + v[j]);
            }
        }
    }

    #[test]
    fn mean_all_examples() {
        let a = Mat::from_rows(&[vec![1.0, 3.0]]).unwrap();
        assert_eq!(a.mean_all().unwrap(), 2.0);
        assert_eq!(Mat::zeros(3, 3).mean_all().unwrap(), 0.0);

        let mut rng = crate::rng::RngStream::new(11);
        let m: Mat = rng.uniform_matrix(-1.0, 1.0, 4, 4).unwrap();
        let want: f64 = m.data().iter().sum::<f64>() / 16.0;
        assert!((m.mean_all().unwrap() - want).abs() < 1e-15);
    }

    #[test]
    fn gather_rows_copies_in_order() {
        let a = Mat::from_rows(&[vec![0.0], vec![1.0], vec![2.0]]).unwrap();
        let g = a.gather_rows(&[2, 0]).unwrap();
        assert_eq!(g.data(), &[2.0, 0.0]);
        assert!(a.gather_rows(&[3]).is_err());
    }

    #[test]
    fn generic_over_f32() {
        let a: Matrix<f32> = Matrix::from_rows(&[vec![1.0f32, 2.0], vec![3.0, 4.0]]).unwrap();
        let got = a.matmul(&Matrix::identity(2)).unwrap();
        assert_eq!(got, a);
    }
}

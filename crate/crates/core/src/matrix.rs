//! Dense row-major matrix of `f64`, the carrier type for every operation
//! in this crate. Degenerate shapes (`0 x n`, `m x 0`) are legal; entries
//! are validated to be finite on construction.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    /// Builds a matrix from row-major data, rejecting length mismatches and
    /// non-finite entries.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        let expected = rows * cols;
        if data.len() != expected {
            return Err(Error::DimensionMismatch {
                rows,
                cols,
                expected,
                actual: data.len(),
            });
        }
        if let Some(pos) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                row: if cols == 0 { 0 } else { pos / cols },
                col: if cols == 0 { 0 } else { pos % cols },
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(m * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::InvalidArgument(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Self::new(m, n, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Column vector (`len x 1`) from a slice.
    pub fn column_vector(v: &[f64]) -> Result<Self> {
        Self::new(v.len(), 1, v.to_vec())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = value;
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Matrix product; panics on inner-dimension mismatch. Public entry
    /// points validate shapes before arithmetic reaches this.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "inner dimensions mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += aik * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// `|self - other|_F`; panics if shapes differ.
    pub fn distance(&self, other: &Self) -> f64 {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in distance");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.shape() == other.shape() && self.distance(other) <= tol
    }

    pub fn symmetry_defect(&self) -> f64 {
        assert!(self.is_square());
        let mut s = 0.0;
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                let d = self.get(i, j) - self.get(j, i);
                s += 2.0 * d * d;
            }
        }
        s.sqrt()
    }

    pub fn select_rows(&self, indices: &[usize]) -> Result<Self> {
        let mut out = Self::zeros(indices.len(), self.cols);
        for (k, &i) in indices.iter().enumerate() {
            if i >= self.rows {
                return Err(Error::InvalidIndices(format!(
                    "row index {i} out of bounds for {} rows",
                    self.rows
                )));
            }
            for j in 0..self.cols {
                out.set(k, j, self.get(i, j));
            }
        }
        Ok(out)
    }

    pub fn select_columns(&self, indices: &[usize]) -> Result<Self> {
        let mut out = Self::zeros(self.rows, indices.len());
        for (k, &j) in indices.iter().enumerate() {
            if j >= self.cols {
                return Err(Error::InvalidIndices(format!(
                    "column index {j} out of bounds for {} columns",
                    self.cols
                )));
            }
            for i in 0..self.rows {
                out.set(i, k, self.get(i, j));
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch {
                context: "hstack requires equal row counts",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        Ok(out)
    }

    /// Vertical concatenation `[self; other]`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                context: "vstack requires equal column counts",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_columns(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Permutation matrix `P` with `P[i, perm[i]] = 1`, so `P * A` reorders
    /// the rows of `A` as `perm`.
    pub fn row_permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut p = Self::zeros(n, n);
        for (i, &j) in perm.iter().enumerate() {
            p.set(i, j, 1.0);
        }
        p
    }

    /// Columns of the identity: `I(:, indices)`, sized `n x indices.len()`.
    pub fn identity_columns(n: usize, indices: &[usize]) -> Result<Self> {
        let mut p = Self::zeros(n, indices.len());
        for (k, &i) in indices.iter().enumerate() {
            if i >= n {
                return Err(Error::InvalidIndices(format!(
                    "index {i} out of bounds for size {n}"
                )));
            }
            p.set(i, k, 1.0);
        }
        Ok(p)
    }
}

impl Add for &DenseMatrix {
    type Output = DenseMatrix;
    fn add(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in add");
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &DenseMatrix {
    type Output = DenseMatrix;
    fn sub(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in sub");
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &DenseMatrix {
    type Output = DenseMatrix;
    fn mul(self, rhs: &DenseMatrix) -> DenseMatrix {
        self.matmul(rhs)
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{} x {}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| format!("{v:>12.6}")).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_nan_and_length_mismatch() {
        assert!(matches!(
            DenseMatrix::new(2, 2, vec![1.0, f64::NAN, 0.0, 1.0]),
            Err(Error::NonFinite { row: 0, col: 1 })
        ));
        assert!(matches!(
            DenseMatrix::new(2, 2, vec![1.0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn degenerate_shapes_are_legal() {
        let a = DenseMatrix::zeros(0, 3);
        let b = DenseMatrix::zeros(3, 0);
        assert_eq!(a.matmul(&b).shape(), (0, 0));
        assert_eq!(b.matmul(&a).shape(), (3, 3));
        assert_eq!(b.matmul(&a).frobenius_norm(), 0.0);
    }

    #[test]
    fn matmul_matches_hand_computation() {
        let a = DenseMatrix::from_rows(&[[1.0, 4.0, 5.0], [2.0, 3.0, 5.0]]).unwrap();
        let b = a.transpose();
        let aat = a.matmul(&b);
        assert_eq!(aat.get(0, 0), 42.0);
        assert_eq!(aat.get(0, 1), 39.0);
        assert_eq!(aat.get(1, 1), 38.0);
    }

    #[test]
    fn permutation_helpers() {
        let p = DenseMatrix::row_permutation(&[2, 0, 1]);
        let a = DenseMatrix::from_rows(&[[1.0], [2.0], [3.0]]).unwrap();
        let pa = p.matmul(&a);
        assert_eq!(pa.column(0), vec![3.0, 1.0, 2.0]);

        let q = DenseMatrix::identity_columns(3, &[0, 2]).unwrap();
        assert_eq!(q.shape(), (3, 2));
        assert_eq!(q.get(2, 1), 1.0);
    }
}

//! Reduced row echelon form with partial (max-magnitude) pivoting. Pivot
//! columns get an exact identity submatrix so downstream full-rank
//! factorizations inherit the textbook structure.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

#[derive(Debug, Clone)]
pub struct Rref {
    /// Full `m x n` form; the first `pivot_columns.len()` rows are the
    /// nonzero rows, the rest are zero.
    pub matrix: DenseMatrix,
    /// Strictly increasing; its length is the numeric rank at `tol`.
    pub pivot_columns: Vec<usize>,
}

/// Elimination threshold matched to the default rank tolerance scale.
pub fn rref_auto_tolerance(a: &DenseMatrix) -> f64 {
    let scale = a.max_abs();
    if scale == 0.0 {
        f64::EPSILON
    } else {
        scale * a.rows().max(a.cols()) as f64 * f64::EPSILON
    }
}

pub fn rref(a: &DenseMatrix, tol: f64) -> Result<Rref> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "rref tolerance must be positive, got {tol}"
        )));
    }
    let (m, n) = a.shape();
    let mut work = a.clone();
    let mut pivot_columns = Vec::new();
    let mut pivot_row = 0usize;

    for col in 0..n {
        if pivot_row >= m {
            break;
        }
        let mut best = pivot_row;
        let mut best_abs = work.get(pivot_row, col).abs();
        for i in (pivot_row + 1)..m {
            let v = work.get(i, col).abs();
            if v > best_abs {
                best = i;
                best_abs = v;
            }
        }
        if best_abs <= tol {
            continue;
        }
        work.swap_rows(pivot_row, best);
        let pivot = work.get(pivot_row, col);
        for j in col..n {
            work.set(pivot_row, j, work.get(pivot_row, j) / pivot);
        }
        for i in 0..m {
            if i == pivot_row {
                continue;
            }
            let factor = work.get(i, col);
            if factor == 0.0 {
                continue;
            }
            for j in col..n {
                let cur = work.get(i, j);
                work.set(i, j, cur - factor * work.get(pivot_row, j));
            }
        }
        // pin the pivot column to exact unit-vector form
        for i in 0..m {
            work.set(i, col, if i == pivot_row { 1.0 } else { 0.0 });
        }
        pivot_columns.push(col);
        pivot_row += 1;
    }

    Ok(Rref {
        matrix: work,
        pivot_columns,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_three_is_sum_of_first_two() {
        let a = DenseMatrix::from_rows(&[[1.0, 4.0, 5.0], [2.0, 3.0, 5.0]]).unwrap();
        let r = rref(&a, rref_auto_tolerance(&a)).unwrap();
        assert_eq!(r.pivot_columns, vec![0, 1]);
        let expected = DenseMatrix::from_rows(&[[1.0, 0.0, 1.0], [0.0, 1.0, 1.0]]).unwrap();
        assert!(r.matrix.approx_eq(&expected, 1e-14));
    }

    #[test]
    fn identity_is_fixed_point() {
        let r = rref(&DenseMatrix::identity(3), 1e-12).unwrap();
        assert_eq!(r.pivot_columns, vec![0, 1, 2]);
        assert!(r.matrix.approx_eq(&DenseMatrix::identity(3), 0.0));
    }

    #[test]
    fn rank_one_matrix_has_single_pivot() {
        let a = DenseMatrix::from_rows(&[[1.0, 1.0], [1.0, 1.0]]).unwrap();
        let r = rref(&a, 1e-12).unwrap();
        assert_eq!(r.pivot_columns, vec![0]);
        assert!(r.matrix.row(1).iter().all(|&v| v == 0.0));
    }

    #[test]
    fn rejects_nonpositive_tolerance() {
        let a = DenseMatrix::identity(2);
        assert!(rref(&a, 0.0).is_err());
        assert!(rref(&a, -1.0).is_err());
    }
}

//! LU factorization with complete pivoting, `B A D = L U`, and the dense
//! linear solver built on it.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

/// `B A D = L U` with `L` unit lower trapezoidal (`|entries| <= 1` thanks
/// to complete pivoting) and `U` upper trapezoidal. `row_perm`/`col_perm`
/// hold the pivot order: `(BAD)[i][j] = A[row_perm[i]][col_perm[j]]`.
#[derive(Debug, Clone)]
pub struct LuCompletePivoted {
    pub l: DenseMatrix,
    pub u: DenseMatrix,
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
}

impl LuCompletePivoted {
    /// Row permutation matrix `B` (`m x m`).
    pub fn b_matrix(&self) -> DenseMatrix {
        DenseMatrix::row_permutation(&self.row_perm)
    }

    /// Column permutation matrix `D` (`n x n`), `A D = A(:, col_perm)`.
    pub fn d_matrix(&self) -> DenseMatrix {
        DenseMatrix::identity_columns(self.col_perm.len(), &self.col_perm)
            .expect("permutation indices are in range")
    }
}

pub fn lu_complete_pivoted(a: &DenseMatrix) -> LuCompletePivoted {
    let (m, n) = a.shape();
    let k = m.min(n);
    let mut work = a.clone();
    let mut row_perm: Vec<usize> = (0..m).collect();
    let mut col_perm: Vec<usize> = (0..n).collect();

    for step in 0..k {
        // Maximal-magnitude entry of the active submatrix; row-major scan
        // keeps the first occurrence on ties.
        let mut pi = step;
        let mut pj = step;
        let mut best = 0.0;
        for i in step..m {
            for j in step..n {
                let v = work.get(i, j).abs();
                if v > best {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        }
        if best == 0.0 {
            break; // remaining block is zero; trailing rows of U stay zero
        }
        work.swap_rows(step, pi);
        row_perm.swap(step, pi);
        work.swap_columns(step, pj);
        col_perm.swap(step, pj);

        let pivot = work.get(step, step);
        for i in (step + 1)..m {
            let mult = work.get(i, step) / pivot;
            work.set(i, step, mult);
            for j in (step + 1)..n {
                let cur = work.get(i, j);
                work.set(i, j, cur - mult * work.get(step, j));
            }
        }
    }

    let mut l = DenseMatrix::zeros(m, k);
    let mut u = DenseMatrix::zeros(k, n);
    for i in 0..m {
        for j in 0..k.min(i) {
            l.set(i, j, work.get(i, j));
        }
        if i < k {
            l.set(i, i, 1.0);
        }
    }
    for i in 0..k {
        for j in i..n {
            u.set(i, j, work.get(i, j));
        }
    }

    LuCompletePivoted {
        l,
        u,
        row_perm,
        col_perm,
    }
}

/// Solves `A X = B` for square `A` via complete-pivoted LU.
pub fn solve_square(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    let n = a.rows();
    if !a.is_square() || b.rows() != n {
        return Err(Error::ShapeMismatch {
            context: "solve_square requires square A and conforming B",
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: b.rows(),
            right_cols: b.cols(),
        });
    }
    if n == 0 {
        return Ok(DenseMatrix::zeros(0, b.cols()));
    }
    let lu = lu_complete_pivoted(a);
    let threshold = f64::EPSILON * n as f64 * a.max_abs();
    for i in 0..n {
        let pivot = lu.u.get(i, i).abs();
        if pivot <= threshold {
            return Err(Error::Singular { pivot, threshold });
        }
    }

    let nrhs = b.cols();
    let mut x = DenseMatrix::zeros(n, nrhs);
    for col in 0..nrhs {
        // forward: L y = B b(:, col)
        let mut y = vec![0.0; n];
        for i in 0..n {
            let mut acc = b.get(lu.row_perm[i], col);
            for j in 0..i {
                acc -= lu.l.get(i, j) * y[j];
            }
            y[i] = acc;
        }
        // backward: U z = y
        let mut z = vec![0.0; n];
        for i in (0..n).rev() {
            let mut acc = y[i];
            for j in (i + 1)..n {
                acc -= lu.u.get(i, j) * z[j];
            }
            z[i] = acc / lu.u.get(i, i);
        }
        // undo the column permutation: x[col_perm[i]] = z[i]
        for i in 0..n {
            x.set(lu.col_perm[i], col, z[i]);
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reconstruct(a: &DenseMatrix, f: &LuCompletePivoted) -> f64 {
        let bad = f.b_matrix().matmul(a).matmul(&f.d_matrix());
        bad.distance(&f.l.matmul(&f.u))
    }

    #[test]
    fn identity_is_its_own_factorization() {
        let f = lu_complete_pivoted(&DenseMatrix::identity(2));
        assert!(f.l.approx_eq(&DenseMatrix::identity(2), 1e-15));
        assert!(f.u.approx_eq(&DenseMatrix::identity(2), 1e-15));
    }

    #[test]
    fn max_entry_pivot_swaps_rows() {
        let a = DenseMatrix::from_rows(&[[0.0, 1.0], [2.0, 0.0]]).unwrap();
        let f = lu_complete_pivoted(&a);
        assert_eq!(f.row_perm[0], 1);
        assert_eq!(f.u.get(0, 0), 2.0);
        assert!(reconstruct(&a, &f) < 1e-14);
    }

    #[test]
    fn reconstructs_wide_example_with_bounded_multipliers() {
        let a = DenseMatrix::from_rows(&[[1.0, 4.0, 5.0], [2.0, 3.0, 5.0]]).unwrap();
        let f = lu_complete_pivoted(&a);
        assert!(reconstruct(&a, &f) <= 1e-12 * a.frobenius_norm());
        assert!(f.l.max_abs() <= 1.0 + 1e-15);
    }

    #[test]
    fn rank_deficient_has_zero_trailing_rows() {
        let a = DenseMatrix::from_rows(&[[1.0, 1.0], [1.0, 1.0]]).unwrap();
        let f = lu_complete_pivoted(&a);
        assert!(reconstruct(&a, &f) < 1e-14);
        assert!(f.u.row(1).iter().all(|&v| v.abs() < 1e-14));
    }

    #[test]
    fn solve_square_round_trip() {
        let a = DenseMatrix::from_rows(&[[2.0, 1.0], [1.0, 3.0]]).unwrap();
        let b = DenseMatrix::from_rows(&[[3.0], [5.0]]).unwrap();
        let x = solve_square(&a, &b).unwrap();
        assert!(a.matmul(&x).approx_eq(&b, 1e-12));
    }

    #[test]
    fn solve_square_detects_singularity() {
        let a = DenseMatrix::from_rows(&[[1.0, 1.0], [1.0, 1.0]]).unwrap();
        let b = DenseMatrix::from_rows(&[[1.0], [1.0]]).unwrap();
        assert!(matches!(solve_square(&a, &b), Err(Error::Singular { .. })));
    }
}

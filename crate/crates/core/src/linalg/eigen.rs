//! Symmetric eigendecomposition by cyclic Jacobi rotations
//! (Numerical Recipes 11.1 scheme).

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

const MAX_SWEEPS: usize = 64;
const SYMMETRY_REL_TOL: f64 = 1e-10;

/// `S = V * diag(eigenvalues) * V^T` with eigenvalues ascending and the
/// columns of `eigenvectors` orthonormal.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: DenseMatrix,
}

pub fn symmetric_eigen(s: &DenseMatrix) -> Result<SymmetricEigen> {
    if !s.is_square() {
        return Err(Error::ShapeMismatch {
            context: "eigensolver requires a square matrix",
            left_rows: s.rows(),
            left_cols: s.cols(),
            right_rows: s.rows(),
            right_cols: s.rows(),
        });
    }
    let asymmetry = s.symmetry_defect();
    let bound = SYMMETRY_REL_TOL * s.frobenius_norm();
    if asymmetry > bound {
        return Err(Error::NotSymmetric { asymmetry, bound });
    }

    let n = s.rows();
    if n == 0 {
        return Ok(SymmetricEigen {
            eigenvalues: Vec::new(),
            eigenvectors: DenseMatrix::zeros(0, 0),
        });
    }

    // Work on the symmetrized upper triangle so a tolerated defect cannot
    // leak into the rotations.
    let mut a = s.clone();
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = 0.5 * (a.get(i, j) + a.get(j, i));
            a.set(i, j, avg);
            a.set(j, i, avg);
        }
    }

    let mut v = DenseMatrix::identity(n);
    let mut d: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    let mut converged = false;
    for sweep in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                off += a.get(p, q).abs();
            }
        }
        if off == 0.0 {
            converged = true;
            break;
        }
        let thresh = if sweep < 3 {
            0.2 * off / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let g = 100.0 * a.get(p, q).abs();
                if sweep > 3 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a.set(p, q, 0.0);
                } else if a.get(p, q).abs() > thresh {
                    let mut h = d[q] - d[p];
                    let t = if h.abs() + g == h.abs() {
                        a.get(p, q) / h
                    } else {
                        let theta = 0.5 * h / a.get(p, q);
                        let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                        if theta < 0.0 {
                            t = -t;
                        }
                        t
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let sn = t * c;
                    let tau = sn / (1.0 + c);
                    h = t * a.get(p, q);
                    z[p] -= h;
                    z[q] += h;
                    d[p] -= h;
                    d[q] += h;
                    a.set(p, q, 0.0);
                    let mut rotate = |mat: &mut DenseMatrix, i: usize, j: usize, k: usize, l: usize| {
                        let g = mat.get(i, j);
                        let h = mat.get(k, l);
                        mat.set(i, j, g - sn * (h + g * tau));
                        mat.set(k, l, h + sn * (g - h * tau));
                    };
                    for j in 0..p {
                        rotate(&mut a, j, p, j, q);
                    }
                    for j in (p + 1)..q {
                        rotate(&mut a, p, j, j, q);
                    }
                    for j in (q + 1)..n {
                        rotate(&mut a, p, j, q, j);
                    }
                    for j in 0..n {
                        rotate(&mut v, j, p, j, q);
                    }
                }
            }
        }
        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    if !converged {
        return Err(Error::EigenNoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let mut vectors = DenseMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        for i in 0..n {
            vectors.set(i, dst, v.get(i, src));
        }
    }

    Ok(SymmetricEigen {
        eigenvalues,
        eigenvectors: vectors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_sorted_ascending() {
        let s = DenseMatrix::from_rows(&[[3.0, 0.0], [0.0, 1.0]]).unwrap();
        let e = symmetric_eigen(&s).unwrap();
        assert_eq!(e.eigenvalues, vec![1.0, 3.0]);
    }

    #[test]
    fn identity_eigenvalues() {
        let e = symmetric_eigen(&DenseMatrix::identity(2)).unwrap();
        assert_eq!(e.eigenvalues, vec![1.0, 1.0]);
    }

    #[test]
    fn rejects_asymmetric_input() {
        let s = DenseMatrix::from_rows(&[[1.0, 2.0], [0.0, 1.0]]).unwrap();
        assert!(matches!(
            symmetric_eigen(&s),
            Err(Error::NotSymmetric { .. })
        ));
    }

    #[test]
    fn path_laplacian_spectrum() {
        let l = DenseMatrix::from_rows(&[
            [1.0, -1.0, 0.0, 0.0],
            [-1.0, 2.0, -1.0, 0.0],
            [0.0, -1.0, 2.0, -1.0],
            [0.0, 0.0, -1.0, 1.0],
        ])
        .unwrap();
        let e = symmetric_eigen(&l).unwrap();
        let expected = [0.0, 2.0 - 2.0_f64.sqrt(), 2.0, 2.0 + 2.0_f64.sqrt()];
        for (got, want) in e.eigenvalues.iter().zip(expected) {
            assert!((got - want).abs() < 1e-10, "{got} vs {want}");
        }
        // residual S V = V diag
        let mut lambda = DenseMatrix::zeros(4, 4);
        for i in 0..4 {
            lambda.set(i, i, e.eigenvalues[i]);
        }
        let lhs = l.matmul(&e.eigenvectors);
        let rhs = e.eigenvectors.matmul(&lambda);
        assert!(lhs.distance(&rhs) < 1e-10 * l.frobenius_norm());
    }
}

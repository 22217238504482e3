//! Thin singular value decomposition via one-sided (Hestenes) Jacobi
//! rotations. Accurate at desk scale and free of bidiagonalization
//! bookkeeping; rank decisions downstream only need reliable singular
//! values and orthonormal factors.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

const MAX_SWEEPS: usize = 64;
const COUPLING_TOL: f64 = 4.0 * f64::EPSILON;

/// Thin SVD `A = U * diag(S) * V^T` with `U` of shape `m x k`,
/// `V` of shape `n x k`, `k = min(m, n)`, and `S` sorted descending.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: DenseMatrix,
    pub singular_values: Vec<f64>,
    pub v: DenseMatrix,
}

pub fn svd(a: &DenseMatrix) -> Result<Svd> {
    let (m, n) = a.shape();
    if m < n {
        let t = svd(&a.transpose())?;
        return Ok(Svd {
            u: t.v,
            singular_values: t.singular_values,
            v: t.u,
        });
    }
    if n == 0 {
        return Ok(Svd {
            u: DenseMatrix::zeros(m, 0),
            singular_values: Vec::new(),
            v: DenseMatrix::zeros(0, 0),
        });
    }

    let mut w = a.clone();
    let mut v = DenseMatrix::identity(n);
    let mut converged = false;
    let mut worst = 0.0_f64;

    for _sweep in 0..MAX_SWEEPS {
        let mut rotated = false;
        worst = 0.0;
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let mut alpha = 0.0;
                let mut beta = 0.0;
                let mut gamma = 0.0;
                for i in 0..m {
                    let wp = w.get(i, p);
                    let wq = w.get(i, q);
                    alpha += wp * wp;
                    beta += wq * wq;
                    gamma += wp * wq;
                }
                if gamma == 0.0 {
                    continue;
                }
                let coupling = gamma.abs() / (alpha.sqrt() * beta.sqrt());
                worst = worst.max(coupling);
                if coupling <= COUPLING_TOL {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let sign = if zeta >= 0.0 { 1.0 } else { -1.0 };
                let t = sign / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..m {
                    let wp = w.get(i, p);
                    let wq = w.get(i, q);
                    w.set(i, p, c * wp - s * wq);
                    w.set(i, q, s * wp + c * wq);
                }
                for i in 0..n {
                    let vp = v.get(i, p);
                    let vq = v.get(i, q);
                    v.set(i, p, c * vp - s * vq);
                    v.set(i, q, s * vp + c * vq);
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::SvdNoConvergence {
            sweeps: MAX_SWEEPS,
            off: worst,
        });
    }

    // Column norms of the rotated matrix are the singular values.
    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<f64> = (0..n)
        .map(|j| (0..m).map(|i| w.get(i, j).powi(2)).sum::<f64>().sqrt())
        .collect();
    order.sort_by(|&a, &b| norms[b].partial_cmp(&norms[a]).unwrap());

    let mut u = DenseMatrix::zeros(m, n);
    let mut vv = DenseMatrix::zeros(n, n);
    let mut singular_values = Vec::with_capacity(n);
    let mut synthesized = Vec::new();
    for (dst, &src) in order.iter().enumerate() {
        let sigma = norms[src];
        singular_values.push(sigma);
        for i in 0..n {
            vv.set(i, dst, v.get(i, src));
        }
        if sigma > 0.0 {
            for i in 0..m {
                u.set(i, dst, w.get(i, src) / sigma);
            }
        } else {
            synthesized.push(dst);
        }
    }
    // Structurally zero columns carry no direction; extend U to an
    // orthonormal set so U^T U = I holds for every rank.
    for &dst in &synthesized {
        fill_orthonormal_column(&mut u, dst, m, n);
    }

    Ok(Svd {
        u,
        singular_values,
        v: vv,
    })
}

fn fill_orthonormal_column(u: &mut DenseMatrix, dst: usize, m: usize, n: usize) {
    for candidate in 0..m {
        let mut col = vec![0.0; m];
        col[candidate] = 1.0;
        // Gram-Schmidt against every other column already in place.
        for j in 0..n {
            if j == dst {
                continue;
            }
            let dot: f64 = (0..m).map(|i| col[i] * u.get(i, j)).sum();
            for (i, c) in col.iter_mut().enumerate() {
                *c -= dot * u.get(i, j);
            }
        }
        let norm: f64 = col.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 0.5 {
            for (i, c) in col.iter().enumerate() {
                u.set(i, dst, c / norm);
            }
            return;
        }
    }
    unreachable!("orthonormal completion exists whenever k <= m");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reconstruction_error(a: &DenseMatrix, s: &Svd) -> f64 {
        let k = s.singular_values.len();
        let mut sigma = DenseMatrix::zeros(k, k);
        for (i, &val) in s.singular_values.iter().enumerate() {
            sigma.set(i, i, val);
        }
        let rebuilt = s.u.matmul(&sigma).matmul(&s.v.transpose());
        a.distance(&rebuilt)
    }

    fn orthonormality_error(m: &DenseMatrix) -> f64 {
        let g = m.transpose().matmul(m);
        g.distance(&DenseMatrix::identity(m.cols()))
    }

    #[test]
    fn identity_has_unit_spectrum() {
        let s = svd(&DenseMatrix::identity(2)).unwrap();
        assert_eq!(s.singular_values, vec![1.0, 1.0]);
        assert!(orthonormality_error(&s.u) < 1e-12);
        assert!(orthonormality_error(&s.v) < 1e-12);
    }

    #[test]
    fn zero_matrix_has_zero_spectrum() {
        let s = svd(&DenseMatrix::zeros(2, 3)).unwrap();
        assert_eq!(s.singular_values, vec![0.0, 0.0]);
        assert!(orthonormality_error(&s.u) < 1e-12);
        assert!(orthonormality_error(&s.v) < 1e-12);
    }

    #[test]
    fn reconstructs_wide_example() {
        let a = DenseMatrix::from_rows(&[[1.0, 4.0, 5.0], [2.0, 3.0, 5.0]]).unwrap();
        let s = svd(&a).unwrap();
        assert!(reconstruction_error(&a, &s) <= 1e-12 * a.frobenius_norm().max(1.0));
        assert!(orthonormality_error(&s.u) < 1e-12);
        assert!(orthonormality_error(&s.v) < 1e-12);
        assert!(s.singular_values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn rank_deficient_keeps_orthonormal_factors() {
        let a = DenseMatrix::from_rows(&[
            [1.0, 2.0, 3.0],
            [2.0, 4.0, 6.0],
            [1.0, 1.0, 2.0],
            [3.0, 5.0, 8.0],
        ])
        .unwrap();
        let s = svd(&a).unwrap();
        assert!(reconstruction_error(&a, &s) <= 1e-12 * a.frobenius_norm());
        assert!(orthonormality_error(&s.u) < 1e-12);
        assert!(orthonormality_error(&s.v) < 1e-12);
        assert!(s.singular_values[2] < 1e-14 * s.singular_values[0]);
    }
}

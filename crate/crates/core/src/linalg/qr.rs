//! Householder QR: column-pivoted (rank revealing) and plain thin variants,
//! plus orthonormal completion of a full-column-rank basis.

use crate::error::Result;
use crate::matrix::DenseMatrix;

/// `A * Pi = Q * R` where `Pi = I(:, permutation)`, `Q` has `min(m, n)`
/// orthonormal columns, `R` is upper trapezoidal with nonnegative,
/// nonincreasing diagonal.
#[derive(Debug, Clone)]
pub struct QrColumnPivoted {
    pub q: DenseMatrix,
    pub r: DenseMatrix,
    pub permutation: Vec<usize>,
}

struct Householder {
    work: DenseMatrix,
    reflectors: Vec<Vec<f64>>, // reflector k acts on rows k.., empty if skipped
    perm: Vec<usize>,
}

fn residual_norm(work: &DenseMatrix, from_row: usize, col: usize) -> f64 {
    (from_row..work.rows())
        .map(|i| work.get(i, col).powi(2))
        .sum::<f64>()
        .sqrt()
}

fn factorize(a: &DenseMatrix, pivot: bool) -> Householder {
    let (m, n) = a.shape();
    let k = m.min(n);
    let mut work = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut reflectors = Vec::with_capacity(k);

    for step in 0..k {
        if pivot {
            // Largest residual column norm wins; strict comparison keeps the
            // smallest index on ties.
            let mut best = step;
            let mut best_norm = residual_norm(&work, step, step);
            for j in (step + 1)..n {
                let nj = residual_norm(&work, step, j);
                if nj > best_norm {
                    best = j;
                    best_norm = nj;
                }
            }
            if best != step {
                work.swap_columns(step, best);
                perm.swap(step, best);
            }
        }

        let norm = residual_norm(&work, step, step);
        if norm == 0.0 {
            reflectors.push(Vec::new());
            continue;
        }
        // v = x + sign(x0) * |x| * e1, normalized so the reflection is
        // I - 2 v v^T / (v^T v).
        let x0 = work.get(step, step);
        let alpha = if x0 >= 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = (step..m).map(|i| work.get(i, step)).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|x| x * x).sum();
        if vnorm2 == 0.0 {
            reflectors.push(Vec::new());
            continue;
        }
        for j in step..n {
            let dot: f64 = (0..v.len()).map(|i| v[i] * work.get(step + i, j)).sum();
            let scale = 2.0 * dot / vnorm2;
            for i in 0..v.len() {
                let cur = work.get(step + i, j);
                work.set(step + i, j, cur - scale * v[i]);
            }
        }
        work.set(step, step, alpha);
        for i in (step + 1)..m {
            work.set(i, step, 0.0);
        }
        reflectors.push(v);
    }

    Householder {
        work,
        reflectors,
        perm,
    }
}

/// Applies the accumulated reflections to the first `cols` identity
/// columns, building `Q` (thin when `cols = min(m, n)`, full when
/// `cols = m`).
fn accumulate_q(m: usize, cols: usize, reflectors: &[Vec<f64>]) -> DenseMatrix {
    let mut q = DenseMatrix::zeros(m, cols);
    for j in 0..cols.min(m) {
        q.set(j, j, 1.0);
    }
    for j in 0..cols {
        for (step, v) in reflectors.iter().enumerate().rev() {
            if v.is_empty() {
                continue;
            }
            let vnorm2: f64 = v.iter().map(|x| x * x).sum();
            let dot: f64 = (0..v.len()).map(|i| v[i] * q.get(step + i, j)).sum();
            let scale = 2.0 * dot / vnorm2;
            for i in 0..v.len() {
                let cur = q.get(step + i, j);
                q.set(step + i, j, cur - scale * v[i]);
            }
        }
    }
    q
}

fn extract_r(work: &DenseMatrix, k: usize) -> DenseMatrix {
    let n = work.cols();
    let mut r = DenseMatrix::zeros(k, n);
    for i in 0..k {
        for j in i..n {
            r.set(i, j, work.get(i, j));
        }
    }
    r
}

/// Flips signs so the diagonal of `R` is nonnegative, compensating in `Q`.
fn normalize_signs(q: &mut DenseMatrix, r: &mut DenseMatrix) {
    for i in 0..r.rows().min(r.cols()) {
        if r.get(i, i) < 0.0 {
            for j in 0..r.cols() {
                r.set(i, j, -r.get(i, j));
            }
            for row in 0..q.rows() {
                q.set(row, i, -q.get(row, i));
            }
        }
    }
}

pub fn qr_column_pivoted(a: &DenseMatrix) -> Result<QrColumnPivoted> {
    let (m, n) = a.shape();
    let k = m.min(n);
    let h = factorize(a, true);
    let mut q = accumulate_q(m, k, &h.reflectors);
    let mut r = extract_r(&h.work, k);
    normalize_signs(&mut q, &mut r);
    Ok(QrColumnPivoted {
        q,
        r,
        permutation: h.perm,
    })
}

/// Plain thin QR, `A = Q * R` with `Q` of shape `m x min(m, n)`.
pub fn qr_thin(a: &DenseMatrix) -> (DenseMatrix, DenseMatrix) {
    let (m, n) = a.shape();
    let k = m.min(n);
    let h = factorize(a, false);
    let mut q = accumulate_q(m, k, &h.reflectors);
    let mut r = extract_r(&h.work, k);
    normalize_signs(&mut q, &mut r);
    (q, r)
}

/// Orthonormal basis of the orthogonal complement of the column space of a
/// full-column-rank matrix, taken from the trailing columns of the full
/// Householder `Q`.
pub fn orthonormal_complement(basis: &DenseMatrix) -> DenseMatrix {
    let (m, r) = basis.shape();
    debug_assert!(r <= m);
    if r == m {
        return DenseMatrix::zeros(m, 0);
    }
    if r == 0 {
        return DenseMatrix::identity(m);
    }
    let h = factorize(basis, false);
    let full = accumulate_q(m, m, &h.reflectors);
    let indices: Vec<usize> = (r..m).collect();
    full.select_columns(&indices).expect("indices in range")
}

use thiserror::Error;

/// Errors reported by the toolkit.
///
/// Construction errors and violated mathematical preconditions are kept
/// apart from numerical failures so callers can map them to distinct
/// exit paths.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix dimensions {rows}x{cols} require {expected} entries, got {actual}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        expected: usize,
        actual: usize,
    },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("shape mismatch: {context} (left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols})")]
    ShapeMismatch {
        context: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("SVD did not converge after {sweeps} Jacobi sweeps (max off-diagonal coupling {off:.3e})")]
    SvdNoConvergence { sweeps: usize, off: f64 },

    #[error("eigensolver did not converge after {sweeps} Jacobi sweeps")]
    EigenNoConvergence { sweeps: usize },

    #[error("matrix is not symmetric: |S - S^T|_F = {asymmetry:.3e} exceeds {bound:.3e}")]
    NotSymmetric { asymmetry: f64, bound: f64 },

    #[error("{factor} lacks full {side} rank: numeric rank {rank} < {required}")]
    RankDeficientFactor {
        factor: &'static str,
        side: &'static str,
        rank: usize,
        required: usize,
    },

    #[error("matrix is numerically singular (pivot {pivot:.3e} below threshold {threshold:.3e})")]
    Singular { pivot: f64, threshold: f64 },

    #[error("rank-preservation condition violated: rank(P^T A) = {rank_pta}, rank(AQ) = {rank_aq}, rank(A) = {rank_a}")]
    RankNotPreserved {
        rank_pta: usize,
        rank_aq: usize,
        rank_a: usize,
    },

    #[error("right-hand side is not in the column space (relative residual {residual:.3e})")]
    InconsistentSystem { residual: f64 },

    #[error("sketch is not a square orthogonal pair: {reason}")]
    NotOrthogonalSketch { reason: String },

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("invalid edge ({i}, {j}, {weight}): {reason}")]
    InvalidEdge {
        i: usize,
        j: usize,
        weight: f64,
        reason: &'static str,
    },

    #[error("invalid index selection: {0}")]
    InvalidIndices(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

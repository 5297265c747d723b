use thiserror::Error;

/// Errors surfaced by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not positive definite (pivot {pivot_index} below threshold)")]
    NotPositiveDefinite { pivot_index: usize },

    #[error("invalid p-norm exponent {p}: must be > 1")]
    InvalidExponent { p: f64 },

    #[error("domain error: {0}")]
    Domain(&'static str),

    #[error("power iteration did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("gradient is numerically zero; descent direction undefined")]
    ZeroGradient,

    #[error("curvature sᵀy too small; BFGS update would destroy positive definiteness")]
    CurvatureTooSmall,

    #[error("direction is not a descent direction (gᵀd ≥ 0)")]
    NotDescentDirection,

    #[error("line search failed after {backtracks} backtracking steps")]
    LineSearchFailed { backtracks: usize },

    #[error("unit-sphere sampling failed: {retries} consecutive near-zero draws")]
    DegenerateSample { retries: usize },

    #[error("entries must be finite (no NaN or infinity)")]
    NonFiniteEntry,
}

pub type Result<T> = std::result::Result<T, Error>;

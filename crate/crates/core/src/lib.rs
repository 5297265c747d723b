//! Ellipsoid-norm optimization toolkit.
//!
//! The crate verifies, numerically, that the quasi-Newton search direction is
//! the steepest descent direction under the ellipsoid norm `‖v‖_B = √(vᵀBv)`,
//! together with the inequality chain that underpins the proof
//! (log bound → weighted AM-GM → Young → Hölder → generalized Cauchy-Schwarz).
//!
//! Modules:
//! - [`linalg`]: dense SPD factorization, triangular solves, vector norms,
//!   spectral norm via power iteration.
//! - [`inequalities`]: one checkable operation per inequality, each reporting
//!   both sides, the gap, and whether the equality condition holds.
//! - [`descent`]: closed-form minimizer of `gᵀd` on the unit `‖·‖_B` sphere,
//!   plus an independent sampling oracle.
//! - [`optimizer`]: BFGS quasi-Newton and steepest-descent minimizers with
//!   Armijo backtracking, secant-residual tracking, and built-in objectives.
//! - [`generators`]: deterministic seeded input generators for fuzz campaigns.
//!
//! Core math is generic over the scalar type via [`scalar::Real`]; the
//! aliases below fix `f64` for ordinary use.

pub mod descent;
pub mod error;
pub mod generators;
pub mod inequalities;
pub mod linalg;
pub mod optimizer;
pub mod scalar;

pub use error::Error;
pub use scalar::Real;

/// Dense vector over `f64`.
pub type Vector = linalg::Vector<f64>;
/// General rectangular matrix over `f64`.
pub type Matrix = linalg::Matrix<f64>;
/// Symmetric positive definite matrix over `f64`.
pub type SpdMatrix = linalg::SpdMatrix<f64>;
/// Lower-triangular congruence factor over `f64`.
pub type CongruenceFactor = linalg::CongruenceFactor<f64>;
/// Inequality check report over `f64`.
pub type InequalityReport = inequalities::InequalityReport<f64>;
/// Normalized positive weights over `f64`.
pub type WeightVector = inequalities::WeightVector<f64>;
/// Steepest-direction result over `f64`.
pub type DirectionResult = descent::DirectionResult<f64>;
/// Optimizer configuration over `f64`.
pub type OptimizerConfig = optimizer::OptimizerConfig<f64>;
/// Optimization trace over `f64`.
pub type OptTrace = optimizer::OptTrace<f64>;

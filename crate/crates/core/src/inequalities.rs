//! Checkable inequalities: the log bound, weighted AM-GM, Young, Hölder,
//! Cauchy-Schwarz, the spectral-norm transpose identity, and the generalized
//! Cauchy-Schwarz inequality under an ellipsoid norm.
//!
//! Each check returns an [`InequalityReport`] carrying both sides, the gap,
//! and whether the stated equality condition is predicted and observed.

use crate::error::{Error, Result};
use crate::linalg::{
    check_dim, ellipsoid_norm, factorize, p_norm, solve_spd, spectral_norm, Matrix, SpdMatrix,
    Vector,
};
use crate::scalar::Real;

/// Relative slack granted to the inequality itself (double-precision rounding
/// across desk-scale dimensions).
pub const EPS_REL: f64 = 1e-9;
/// Relative tolerance under which the gap counts as an observed equality.
pub const EPS_EQ: f64 = 1e-8;
/// Cosine defect tolerance for the linear-dependence predicate.
const DEPENDENCE_TOL: f64 = 1e-10;

/// Outcome of a single inequality check: `lhs ≤ rhs` with `gap = rhs − lhs`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityReport<S> {
    pub lhs: S,
    pub rhs: S,
    pub gap: S,
    /// `gap ≥ −EPS_REL·max(1, |rhs|)`.
    pub holds: bool,
    /// The inequality's stated equality condition is satisfied by the inputs.
    pub equality_predicted: bool,
    /// `|gap| ≤ EPS_EQ·max(1, |rhs|)`.
    pub equality_observed: bool,
}

impl<S: Real> InequalityReport<S> {
    fn new(lhs: S, rhs: S, equality_predicted: bool) -> Self {
        let gap = rhs - lhs;
        let scale = S::one().max(rhs.abs());
        Self {
            lhs,
            rhs,
            gap,
            holds: gap >= -S::of(EPS_REL) * scale,
            equality_predicted,
            equality_observed: gap.abs() <= S::of(EPS_EQ) * scale,
        }
    }
}

/// Positive weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector<S> {
    weights: Vec<S>,
}

impl<S: Real> WeightVector<S> {
    pub fn new(weights: Vec<S>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Domain("at least one weight required"));
        }
        if weights.iter().any(|&w| !w.is_finite() || w <= S::zero()) {
            return Err(Error::Domain("weights must be positive and finite"));
        }
        let sum = weights.iter().fold(S::zero(), |acc, &w| acc + w);
        if (sum - S::one()).abs() > S::of(1e-12) {
            return Err(Error::Domain("weights must sum to 1"));
        }
        Ok(Self { weights })
    }

    /// Equal weights `1/n`.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("at least one weight required"));
        }
        let w = S::one() / S::of(n as f64);
        Ok(Self { weights: vec![w; n] })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[S] {
        &self.weights
    }
}

/// Lemma: `ln(x) ≤ x − 1` for `x > 0`, equality iff `x = 1`.
pub fn check_log_bound<S: Real>(x: S) -> Result<InequalityReport<S>> {
    if !(x > S::zero()) {
        return Err(Error::Domain("log bound requires x > 0"));
    }
    let predicted = (x - S::one()).abs() <= S::of(1e-9);
    Ok(InequalityReport::new(x.ln(), x - S::one(), predicted))
}

/// Weighted AM-GM: `Π a_i^{δ_i} ≤ Σ δ_i a_i`, equality iff all `a_i` equal.
///
/// The geometric mean is computed in log space to avoid overflow.
pub fn check_weighted_am_gm<S: Real>(
    a: &Vector<S>,
    w: &WeightVector<S>,
) -> Result<InequalityReport<S>> {
    check_dim(w.len(), a.len())?;
    if a.iter().any(|&v| v <= S::zero()) {
        return Err(Error::Domain("AM-GM requires positive values"));
    }
    let (log_gm, am) = a
        .iter()
        .zip(w.as_slice())
        .fold((S::zero(), S::zero()), |(lg, am), (&ai, &wi)| {
            (lg + wi * ai.ln(), am + wi * ai)
        });
    let a0 = a[0];
    let tol = S::of(1e-9) * S::one().max(a0);
    let predicted = a.iter().all(|&ai| (ai - a0).abs() <= tol);
    Ok(InequalityReport::new(log_gm.exp(), am, predicted))
}

/// Young: `xy ≤ x^p/p + y^q/q` for `x, y ≥ 0`, `p > 1`, `1/p + 1/q = 1`;
/// equality iff `x^p = y^q`.
pub fn check_young<S: Real>(x: S, y: S, p: S) -> Result<InequalityReport<S>> {
    if x < S::zero() || y < S::zero() {
        return Err(Error::Domain("Young check requires nonnegative x, y"));
    }
    if !(p > S::one()) {
        return Err(Error::InvalidExponent { p: p.to_f64().unwrap_or(f64::NAN) });
    }
    let q = p / (p - S::one());
    let xp = x.powf(p);
    let yq = y.powf(q);
    let predicted = (xp - yq).abs() <= S::of(1e-9) * S::one().max(xp);
    Ok(InequalityReport::new(x * y, xp / p + yq / q, predicted))
}

/// Hölder: `|xᵀy| ≤ ‖x‖_p ‖y‖_q` with `q = p/(p−1)`.
///
/// No general equality condition is asserted; at `p = 2` the Cauchy-Schwarz
/// dependence predicate applies.
pub fn check_holder<S: Real>(x: &Vector<S>, y: &Vector<S>, p: S) -> Result<InequalityReport<S>> {
    if !(p > S::one()) {
        return Err(Error::InvalidExponent { p: p.to_f64().unwrap_or(f64::NAN) });
    }
    let q = p / (p - S::one());
    let lhs = x.dot(y)?.abs();
    let rhs = p_norm(x, p)? * p_norm(y, q)?;
    let predicted = if p == S::of(2.0) {
        linearly_dependent(x, y)?
    } else {
        false
    };
    Ok(InequalityReport::new(lhs, rhs, predicted))
}

/// Cauchy-Schwarz: `|xᵀy| ≤ ‖x‖₂‖y‖₂`, equality iff x, y linearly dependent.
pub fn check_cauchy_schwarz<S: Real>(x: &Vector<S>, y: &Vector<S>) -> Result<InequalityReport<S>> {
    let lhs = x.dot(y)?.abs();
    let rhs = x.norm2() * y.norm2();
    Ok(InequalityReport::new(lhs, rhs, linearly_dependent(x, y)?))
}

/// Spectral-norm transpose identity `‖Aᵀ‖₂ = ‖A‖₂`, reported as the
/// two-sided check `σ_max(Aᵀ) ≤ σ_max(A)` with equality always predicted.
pub fn check_transpose_spectral<S: Real>(a: &Matrix<S>) -> Result<InequalityReport<S>> {
    let lhs = spectral_norm(&a.transpose())?;
    let rhs = spectral_norm(a)?;
    let mut report = InequalityReport::new(lhs, rhs, true);
    // identity, not a one-sided bound: holds means the two sides agree
    report.holds = (lhs - rhs).abs() <= S::of(EPS_EQ) * S::one().max(rhs);
    Ok(report)
}

/// Generalized Cauchy-Schwarz under the ellipsoid norm:
/// `|xᵀy| ≤ ‖x‖_A ‖y‖_{A⁻¹}`, equality iff x and A⁻¹y are linearly dependent.
pub fn check_generalized_cs<S: Real>(
    a: &SpdMatrix<S>,
    x: &Vector<S>,
    y: &Vector<S>,
) -> Result<InequalityReport<S>> {
    let factor = factorize(a)?;
    let a_inv_y = solve_spd(&factor, y)?;
    let lhs = x.dot(y)?.abs();
    let y_inv_norm = y.dot(&a_inv_y)?.max(S::zero()).sqrt();
    let rhs = ellipsoid_norm(a, x)? * y_inv_norm;
    Ok(InequalityReport::new(lhs, rhs, linearly_dependent(x, &a_inv_y)?))
}

/// Numerical linear-dependence predicate: true iff either vector is zero or
/// `|uᵀv| ≥ (1 − 1e−10)·‖u‖₂‖v‖₂`.
pub fn linearly_dependent<S: Real>(u: &Vector<S>, v: &Vector<S>) -> Result<bool> {
    let prod = u.dot(v)?.abs();
    let nu = u.norm2();
    let nv = v.norm2();
    if nu == S::zero() || nv == S::zero() {
        return Ok(true);
    }
    Ok(prod >= (S::one() - S::of(DEPENDENCE_TOL)) * nu * nv)
}

//! Quasi-Newton (BFGS) and steepest-descent minimizers with Armijo
//! backtracking line search, secant-residual tracking, central-difference
//! gradient checking, and built-in test objectives.

use crate::error::{Error, Result};
use crate::linalg::{check_dim, factorize, solve_spd, SpdMatrix, Vector};
use crate::scalar::Real;

/// Differentiable objective function on `R^n`.
pub trait Objective<S: Real> {
    fn dimension(&self) -> usize;
    fn evaluate(&self, x: &Vector<S>) -> S;
    fn gradient(&self, x: &Vector<S>) -> Vector<S>;
}

/// Search direction choice for [`minimize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// `d = −B_k⁻¹ g_k` with `B_k` maintained by BFGS updates, `B₀ = I`.
    QuasiNewton,
    /// `d = −g_k`.
    SteepestDescent,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizerConfig<S> {
    pub grad_tol: S,
    pub max_iter: usize,
    pub armijo_c: S,
    pub backtrack_rho: S,
    pub max_backtracks: usize,
    pub curvature_skip_tol: S,
}

impl<S: Real> Default for OptimizerConfig<S> {
    fn default() -> Self {
        Self {
            grad_tol: S::of(1e-8),
            max_iter: 500,
            armijo_c: S::of(1e-4),
            backtrack_rho: S::of(0.5),
            max_backtracks: 60,
            curvature_skip_tol: S::of(1e-10),
        }
    }
}

impl<S: Real> OptimizerConfig<S> {
    pub fn validate(&self) -> Result<()> {
        if !(self.grad_tol > S::zero()) {
            return Err(Error::Domain("grad_tol must be positive"));
        }
        if self.max_iter == 0 || self.max_backtracks == 0 {
            return Err(Error::Domain("iteration limits must be positive"));
        }
        if !(self.armijo_c > S::zero() && self.armijo_c < S::one()) {
            return Err(Error::Domain("armijo_c must lie in (0, 1)"));
        }
        if !(self.backtrack_rho > S::zero() && self.backtrack_rho < S::one()) {
            return Err(Error::Domain("backtrack_rho must lie in (0, 1)"));
        }
        if !(self.curvature_skip_tol > S::zero()) {
            return Err(Error::Domain("curvature_skip_tol must be positive"));
        }
        Ok(())
    }
}

/// Why a run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    GradToleranceMet,
    MaxIterations,
    LineSearchFailed,
}

/// One row of an optimization trace.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationRecord<S> {
    pub k: usize,
    pub x: Vector<S>,
    pub f: S,
    pub grad_norm: S,
    /// Step length taken from this iterate; `None` on the final record.
    pub alpha: Option<S>,
    /// `‖B_{k+1}s_k − y_k‖₂` when a BFGS update was performed at this step.
    pub secant_residual: Option<S>,
}

/// Full per-iteration history of a [`minimize`] run.
#[derive(Debug, Clone, PartialEq)]
pub struct OptTrace<S> {
    pub records: Vec<IterationRecord<S>>,
    pub termination: Termination,
}

impl<S: Real> OptTrace<S> {
    /// Number of steps actually taken.
    pub fn iterations(&self) -> usize {
        self.records.len().saturating_sub(1)
    }

    pub fn final_point(&self) -> &Vector<S> {
        &self.records.last().expect("trace is never empty").x
    }

    pub fn final_grad_norm(&self) -> S {
        self.records.last().expect("trace is never empty").grad_norm
    }
}

/// Rank-two BFGS update `B' = B − (Bs sᵀB)/(sᵀBs) + (y yᵀ)/(yᵀs)`,
/// the canonical SPD-preserving update satisfying the secant equation
/// `B's = y`.
///
/// Fails with [`Error::CurvatureTooSmall`] when
/// `sᵀy ≤ skip_tol·‖s‖₂‖y‖₂`; callers should keep the previous `B`.
pub fn bfgs_update<S: Real>(
    b: &SpdMatrix<S>,
    s: &Vector<S>,
    y: &Vector<S>,
    skip_tol: S,
) -> Result<SpdMatrix<S>> {
    let n = b.dim();
    check_dim(n, s.len())?;
    check_dim(n, y.len())?;
    let sy = s.dot(y)?;
    if sy <= skip_tol * s.norm2() * y.norm2() {
        return Err(Error::CurvatureTooSmall);
    }
    let bs = b.mul_vec(s)?;
    let sbs = s.dot(&bs)?;
    if sbs <= S::zero() {
        return Err(Error::NotPositiveDefinite { pivot_index: 0 });
    }
    let mut data = vec![S::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            data[i * n + j] = b.get(i, j) - bs[i] * bs[j] / sbs + y[i] * y[j] / sy;
        }
    }
    // symmetrize away rounding noise before the symmetry check
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = (data[i * n + j] + data[j * n + i]) * S::of(0.5);
            data[i * n + j] = avg;
            data[j * n + i] = avg;
        }
    }
    SpdMatrix::new(n, data)
}

/// Armijo backtracking: returns the largest `α ∈ {1, ρ, ρ², …}` with
/// `f(x + αd) ≤ f(x) + c·α·gᵀd`.
pub fn backtracking_line_search<S: Real>(
    obj: &dyn Objective<S>,
    x: &Vector<S>,
    d: &Vector<S>,
    g: &Vector<S>,
    cfg: &OptimizerConfig<S>,
) -> Result<S> {
    let slope = g.dot(d)?;
    if slope >= S::zero() {
        return Err(Error::NotDescentDirection);
    }
    let fx = obj.evaluate(x);
    let mut alpha = S::one();
    for _ in 0..cfg.max_backtracks {
        let trial = x.add(&d.scale(alpha))?;
        if obj.evaluate(&trial) <= fx + cfg.armijo_c * alpha * slope {
            return Ok(alpha);
        }
        alpha = alpha * cfg.backtrack_rho;
    }
    Err(Error::LineSearchFailed { backtracks: cfg.max_backtracks })
}

/// Minimizes `obj` from `x0`, terminating when `‖g_k‖₂ ≤ grad_tol` or at
/// `max_iter` steps. Quasi-Newton maintains `B_k` with [`bfgs_update`],
/// skipping updates whose curvature is too small. Line-search failure ends
/// the run with the partial trace attached.
pub fn minimize<S: Real>(
    obj: &dyn Objective<S>,
    x0: &Vector<S>,
    method: Method,
    cfg: &OptimizerConfig<S>,
) -> Result<OptTrace<S>> {
    cfg.validate()?;
    check_dim(obj.dimension(), x0.len())?;
    let n = x0.len();

    let mut x = x0.clone();
    let mut fx = obj.evaluate(&x);
    let mut g = obj.gradient(&x);
    let mut b = SpdMatrix::identity(n);
    let mut records = Vec::new();

    for k in 0..=cfg.max_iter {
        let grad_norm = g.norm2();
        if grad_norm <= cfg.grad_tol || k == cfg.max_iter {
            records.push(IterationRecord {
                k,
                x,
                f: fx,
                grad_norm,
                alpha: None,
                secant_residual: None,
            });
            let termination = if grad_norm <= cfg.grad_tol {
                Termination::GradToleranceMet
            } else {
                Termination::MaxIterations
            };
            return Ok(OptTrace { records, termination });
        }

        let d = match method {
            Method::SteepestDescent => g.scale(-S::one()),
            Method::QuasiNewton => solve_spd(&factorize(&b)?, &g)?.scale(-S::one()),
        };

        let alpha = match backtracking_line_search(obj, &x, &d, &g, cfg) {
            Ok(alpha) => alpha,
            Err(Error::LineSearchFailed { .. }) | Err(Error::NotDescentDirection) => {
                records.push(IterationRecord {
                    k,
                    x,
                    f: fx,
                    grad_norm,
                    alpha: None,
                    secant_residual: None,
                });
                return Ok(OptTrace { records, termination: Termination::LineSearchFailed });
            }
            Err(e) => return Err(e),
        };

        let x_next = x.add(&d.scale(alpha))?;
        let f_next = obj.evaluate(&x_next);
        let g_next = obj.gradient(&x_next);

        let mut secant_residual = None;
        if method == Method::QuasiNewton {
            let s = x_next.sub(&x)?;
            let y = g_next.sub(&g)?;
            match bfgs_update(&b, &s, &y, cfg.curvature_skip_tol) {
                Ok(b_next) => {
                    secant_residual = Some(b_next.mul_vec(&s)?.sub(&y)?.norm2());
                    b = b_next;
                }
                Err(Error::CurvatureTooSmall) => {} // keep B
                Err(e) => return Err(e),
            }
        }

        records.push(IterationRecord {
            k,
            x,
            f: fx,
            grad_norm,
            alpha: Some(alpha),
            secant_residual,
        });
        x = x_next;
        fx = f_next;
        g = g_next;
    }
    unreachable!("loop always returns at k == max_iter")
}

/// Central finite differences `(f(x + h·e_i) − f(x − h·e_i)) / 2h`.
pub fn finite_diff_grad<S: Real>(obj: &dyn Objective<S>, x: &Vector<S>, h: S) -> Result<Vector<S>> {
    if !(h > S::zero()) {
        return Err(Error::Domain("finite-difference step must be positive"));
    }
    let n = x.len();
    let two_h = h + h;
    let mut out = Vec::with_capacity(n);
    let mut probe: Vec<S> = x.as_slice().to_vec();
    for i in 0..n {
        let xi = probe[i];
        probe[i] = xi + h;
        let fp = obj.evaluate(&Vector::new(probe.clone())?);
        probe[i] = xi - h;
        let fm = obj.evaluate(&Vector::new(probe.clone())?);
        probe[i] = xi;
        out.push((fp - fm) / two_h);
    }
    Vector::new(out)
}

/// `½‖x‖²` in n dimensions.
#[derive(Debug, Clone)]
pub struct Sphere {
    pub n: usize,
}

impl<S: Real> Objective<S> for Sphere {
    fn dimension(&self) -> usize {
        self.n
    }
    fn evaluate(&self, x: &Vector<S>) -> S {
        x.dot(x).expect("same vector") * S::of(0.5)
    }
    fn gradient(&self, x: &Vector<S>) -> Vector<S> {
        x.clone()
    }
}

/// The 2-D Rosenbrock function `100(x₂ − x₁²)² + (1 − x₁)²`, global minimum
/// at (1, 1).
#[derive(Debug, Clone)]
pub struct Rosenbrock;

impl<S: Real> Objective<S> for Rosenbrock {
    fn dimension(&self) -> usize {
        2
    }
    fn evaluate(&self, x: &Vector<S>) -> S {
        let hundred = S::of(100.0);
        let t = x[1] - x[0] * x[0];
        let u = S::one() - x[0];
        hundred * t * t + u * u
    }
    fn gradient(&self, x: &Vector<S>) -> Vector<S> {
        let t = x[1] - x[0] * x[0];
        let g0 = -S::of(400.0) * x[0] * t - S::of(2.0) * (S::one() - x[0]);
        let g1 = S::of(200.0) * t;
        Vector::new(vec![g0, g1]).expect("finite")
    }
}

/// Convex quadratic `½xᵀQx + bᵀx` for caller-supplied SPD `Q`.
#[derive(Debug, Clone)]
pub struct Quadratic<S> {
    q: SpdMatrix<S>,
    b: Vector<S>,
}

impl<S: Real> Quadratic<S> {
    /// Validates that `Q` is positive definite (factorization succeeds).
    pub fn new(q: SpdMatrix<S>, b: Vector<S>) -> Result<Self> {
        check_dim(q.dim(), b.len())?;
        factorize(&q)?;
        Ok(Self { q, b })
    }
}

impl<S: Real> Objective<S> for Quadratic<S> {
    fn dimension(&self) -> usize {
        self.q.dim()
    }
    fn evaluate(&self, x: &Vector<S>) -> S {
        let qx = self.q.mul_vec(x).expect("dimension checked at construction");
        qx.dot(x).expect("same dims") * S::of(0.5) + self.b.dot(x).expect("same dims")
    }
    fn gradient(&self, x: &Vector<S>) -> Vector<S> {
        self.q
            .mul_vec(x)
            .and_then(|qx| qx.add(&self.b))
            .expect("dimension checked at construction")
    }
}

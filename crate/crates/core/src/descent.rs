//! Steepest descent direction on the unit sphere of the ellipsoid norm
//! `‖·‖_B`: the closed-form minimizer of `gᵀd` subject to `‖d‖_B = 1`,
//! plus a pure-sampling oracle that verifies minimality independently.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::generators;
use crate::linalg::{ellipsoid_norm, factorize, solve_spd, SpdMatrix, Vector};
use crate::scalar::Real;

/// Gradient magnitude below which the direction is considered undefined.
const ZERO_GRAD_TOL: f64 = 1e-300;
/// Retry budget for degenerate (near-zero) Gaussian draws.
const MAX_SAMPLE_RETRIES: usize = 100;

/// A unit vector in `‖·‖_B` together with the attained objective `gᵀd`.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectionResult<S> {
    pub d: Vector<S>,
    pub value: S,
}

/// Closed-form solution of `min gᵀd s.t. ‖d‖_B = 1`:
/// `d = −B⁻¹g / (gᵀB⁻¹g)^{1/2}` with value `−(gᵀB⁻¹g)^{1/2}`.
///
/// `B⁻¹g` is computed by factorization and triangular solves; no inverse is
/// ever formed.
pub fn steepest_direction<S: Real>(
    g: &Vector<S>,
    b: &SpdMatrix<S>,
) -> Result<DirectionResult<S>> {
    if g.norm2() <= S::of(ZERO_GRAD_TOL) {
        return Err(Error::ZeroGradient);
    }
    let factor = factorize(b)?;
    let w = solve_spd(&factor, g)?;
    let value = -g.dot(&w)?.max(S::zero()).sqrt();
    if value == S::zero() {
        return Err(Error::ZeroGradient);
    }
    // ‖w‖_B = √(gᵀB⁻¹g) in exact arithmetic; normalizing by the B-norm of
    // the computed w keeps ‖d‖_B = 1 even when the solve loses accuracy on
    // ill-conditioned B
    let scale = ellipsoid_norm(b, &w)?;
    Ok(DirectionResult { d: w.scale(-scale.recip()), value })
}

/// The attained minimum `−(gᵀB⁻¹g)^{1/2}`, a constant independent of `d`.
pub fn direction_value<S: Real>(g: &Vector<S>, b: &SpdMatrix<S>) -> Result<S> {
    if g.norm2() <= S::of(ZERO_GRAD_TOL) {
        return Err(Error::ZeroGradient);
    }
    let factor = factorize(b)?;
    let w = solve_spd(&factor, g)?;
    Ok(-g.dot(&w)?.max(S::zero()).sqrt())
}

/// Draws a point on the unit `‖·‖_B` sphere: standard-normal entries
/// normalized in the B-norm. Retries on a near-zero draw, failing after 100.
pub fn sample_unit_sphere<S: Real>(b: &SpdMatrix<S>, seed: u64) -> Result<Vector<S>> {
    let n = b.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_SAMPLE_RETRIES {
        let z = Vector::new((0..n).map(|_| S::of(rng.sample::<f64, _>(StandardNormal))).collect())?;
        if z.norm2() < S::of(1e-12) {
            continue;
        }
        let norm_b = ellipsoid_norm(b, &z)?;
        return Ok(z.scale(norm_b.recip()));
    }
    Err(Error::DegenerateSample { retries: MAX_SAMPLE_RETRIES })
}

/// Pure-sampling oracle for `min gᵀd s.t. ‖d‖_B = 1`: evaluates `gᵀd` over
/// seeded draws and returns the best sampled direction. Never consults the
/// closed form. Each sample derives its own seed, so the result is
/// independent of how the sample range is partitioned; ties break by
/// lexicographically smaller `d`.
pub fn brute_force_min<S: Real>(
    g: &Vector<S>,
    b: &SpdMatrix<S>,
    samples: u64,
    seed: u64,
) -> Result<DirectionResult<S>> {
    if samples == 0 {
        return Err(Error::Domain("at least one sample required"));
    }
    let mut best: Option<DirectionResult<S>> = None;
    for i in 0..samples {
        let case_seed = generators::case_rng(seed, 8, i).gen::<u64>();
        let d = sample_unit_sphere(b, case_seed)?;
        let value = g.dot(&d)?;
        let better = match &best {
            None => true,
            Some(cur) => {
                value < cur.value
                    || (value == cur.value && lex_less(d.as_slice(), cur.d.as_slice()))
            }
        };
        if better {
            best = Some(DirectionResult { d, value });
        }
    }
    Ok(best.expect("samples >= 1"))
}

fn lex_less<S: Real>(a: &[S], b: &[S]) -> bool {
    for (&x, &y) in a.iter().zip(b) {
        if x < y {
            return true;
        }
        if x > y {
            return false;
        }
    }
    false
}

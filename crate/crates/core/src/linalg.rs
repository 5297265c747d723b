//! Minimal dense linear algebra: vectors, SPD matrices, congruence (Cholesky)
//! factorization, triangular solves, p-norms, ellipsoid norms, and spectral
//! norm via power iteration.
//!
//! Storage is dense row-major; problem sizes are desk-scale (n ≤ ~100).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Relative symmetry tolerance for [`SpdMatrix`] construction.
const SYMMETRY_TOL: f64 = 1e-12;
/// Cholesky pivot threshold: pivots must exceed `PIVOT_DELTA · max(diag)`.
const PIVOT_DELTA: f64 = 1e-13;
/// Relative Rayleigh-quotient stagnation tolerance for power iteration.
const POWER_TOL: f64 = 1e-14;
/// Iteration cap for power iteration.
const POWER_MAX_ITER: usize = 10_000;

/// Dense vector with finite entries and fixed dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<S> {
    entries: Vec<S>,
}

impl<S: Real> Vector<S> {
    /// Builds a vector, rejecting NaN/infinite entries and zero dimension.
    pub fn new(entries: Vec<S>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain("vector dimension must be at least 1"));
        }
        if entries.iter().any(|e| !e.is_finite()) {
            return Err(Error::NonFiniteEntry);
        }
        Ok(Self { entries })
    }

    pub fn from_slice(entries: &[S]) -> Result<Self> {
        Self::new(entries.to_vec())
    }

    pub fn zeros(n: usize) -> Self {
        Self { entries: vec![S::zero(); n.max(1)] }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[S] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, S> {
        self.entries.iter()
    }

    pub fn dot(&self, other: &Self) -> Result<S> {
        check_dim(self.len(), other.len())?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(S::zero(), |acc, (&a, &b)| acc + a * b))
    }

    /// Euclidean norm.
    pub fn norm2(&self) -> S {
        self.dot(self).expect("same vector").sqrt()
    }

    pub fn scale(&self, alpha: S) -> Self {
        Self { entries: self.entries.iter().map(|&e| alpha * e).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dim(self.len(), other.len())?;
        Ok(Self {
            entries: self.entries.iter().zip(&other.entries).map(|(&a, &b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_dim(self.len(), other.len())?;
        Ok(Self {
            entries: self.entries.iter().zip(&other.entries).map(|(&a, &b)| a - b).collect(),
        })
    }
}

impl<S> std::ops::Index<usize> for Vector<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.entries[i]
    }
}

/// General rectangular matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Real> Matrix<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Domain("matrix dimensions must be at least 1×1"));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        if data.iter().any(|e| !e.is_finite()) {
            return Err(Error::NonFiniteEntry);
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: &[&[S]]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Domain("ragged rows"));
        }
        Self::new(r, c, rows.iter().flat_map(|row| row.iter().copied()).collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![S::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = S::one();
        }
        Self { rows: n, cols: n, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![S::zero(); self.data.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                data[j * self.rows + i] = self.get(i, j);
            }
        }
        Self { rows: self.cols, cols: self.rows, data }
    }

    /// `Aᵀ A`, the Gram matrix driving the power iteration.
    fn gram(&self) -> Vec<S> {
        let n = self.cols;
        let mut g = vec![S::zero(); n * n];
        for k in 0..self.rows {
            let row = &self.data[k * n..(k + 1) * n];
            for i in 0..n {
                for j in 0..n {
                    g[i * n + j] = g[i * n + j] + row[i] * row[j];
                }
            }
        }
        g
    }
}

/// Symmetric matrix intended to be positive definite.
///
/// Symmetry and finiteness are checked at construction; positive definiteness
/// is defined operationally as [`factorize`] succeeding.
#[derive(Debug, Clone, PartialEq)]
pub struct SpdMatrix<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Real> SpdMatrix<S> {
    pub fn new(n: usize, data: Vec<S>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("matrix dimension must be at least 1"));
        }
        if data.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: data.len() });
        }
        if data.iter().any(|e| !e.is_finite()) {
            return Err(Error::NonFiniteEntry);
        }
        let max_abs = data.iter().fold(S::zero(), |m, &e| m.max(e.abs()));
        let tol = S::of(SYMMETRY_TOL) * S::one().max(max_abs);
        for i in 0..n {
            for j in (i + 1)..n {
                if (data[i * n + j] - data[j * n + i]).abs() > tol {
                    return Err(Error::Domain("matrix is not symmetric"));
                }
            }
        }
        Ok(Self { n, data })
    }

    pub fn from_rows(rows: &[&[S]]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|row| row.len() != n) {
            return Err(Error::Domain("ragged rows"));
        }
        Self::new(n, rows.iter().flat_map(|row| row.iter().copied()).collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![S::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = S::one();
        }
        Self { n, data }
    }

    pub fn diagonal(diag: &[S]) -> Result<Self> {
        let n = diag.len();
        let mut data = vec![S::zero(); n * n];
        for (i, &d) in diag.iter().enumerate() {
            data[i * n + i] = d;
        }
        Self::new(n, data)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        self.data[i * self.n + j]
    }

    /// Matrix-vector product `A·v`.
    pub fn mul_vec(&self, v: &Vector<S>) -> Result<Vector<S>> {
        check_dim(self.n, v.len())?;
        let mut out = vec![S::zero(); self.n];
        for i in 0..self.n {
            let mut acc = S::zero();
            for j in 0..self.n {
                acc = acc + self.get(i, j) * v[j];
            }
            out[i] = acc;
        }
        Ok(Vector { entries: out })
    }

    /// Quadratic form `vᵀAv`.
    pub fn quadratic_form(&self, v: &Vector<S>) -> Result<S> {
        self.mul_vec(v)?.dot(v)
    }
}

/// Lower-triangular factor `L` with strictly positive diagonal realizing
/// `A = L·Lᵀ` — the constructive form of the congruence of an SPD matrix
/// to the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct CongruenceFactor<S> {
    n: usize,
    // dense n×n, strictly-upper part kept at zero
    l: Vec<S>,
}

impl<S: Real> CongruenceFactor<S> {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        self.l[i * self.n + j]
    }

    /// `Lᵀ·v`, so that `‖Lᵀv‖₂ = ‖v‖_A`.
    pub fn transpose_mul_vec(&self, v: &Vector<S>) -> Result<Vector<S>> {
        check_dim(self.n, v.len())?;
        let mut out = vec![S::zero(); self.n];
        for i in 0..self.n {
            let mut acc = S::zero();
            for j in i..self.n {
                acc = acc + self.get(j, i) * v[j];
            }
            out[i] = acc;
        }
        Ok(Vector { entries: out })
    }
}

/// Cholesky-style congruence factorization `A = L·Lᵀ`.
///
/// Fails with [`Error::NotPositiveDefinite`] when any pivot drops to or
/// below `1e−13 · max(diag(A))`, the operational definition of "A is not
/// positive definite".
pub fn factorize<S: Real>(a: &SpdMatrix<S>) -> Result<CongruenceFactor<S>> {
    let n = a.dim();
    let max_diag = (0..n).fold(S::zero(), |m, i| m.max(a.get(i, i)));
    let threshold = S::of(PIVOT_DELTA) * max_diag.max(S::zero());
    let mut l = vec![S::zero(); n * n];
    for j in 0..n {
        for i in j..n {
            let mut s = a.get(i, j);
            for k in 0..j {
                s = s - l[i * n + k] * l[j * n + k];
            }
            if i == j {
                if s <= threshold {
                    return Err(Error::NotPositiveDefinite { pivot_index: j });
                }
                l[j * n + j] = s.sqrt();
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    Ok(CongruenceFactor { n, l })
}

/// Solves `A·x = b` given the factorization `A = L·Lᵀ` by forward and
/// backward triangular substitution; no explicit inverse is ever formed.
pub fn solve_spd<S: Real>(factor: &CongruenceFactor<S>, b: &Vector<S>) -> Result<Vector<S>> {
    let n = factor.dim();
    check_dim(n, b.len())?;
    // forward: L·z = b
    let mut z = vec![S::zero(); n];
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s = s - factor.get(i, k) * z[k];
        }
        z[i] = s / factor.get(i, i);
    }
    // backward: Lᵀ·x = z
    let mut x = vec![S::zero(); n];
    for i in (0..n).rev() {
        let mut s = z[i];
        for k in (i + 1)..n {
            s = s - factor.get(k, i) * x[k];
        }
        x[i] = s / factor.get(i, i);
    }
    Ok(Vector { entries: x })
}

/// Ellipsoid norm `‖v‖_A = √(vᵀAv)`.
pub fn ellipsoid_norm<S: Real>(a: &SpdMatrix<S>, v: &Vector<S>) -> Result<S> {
    let q = a.quadratic_form(v)?;
    // rounding can push a tiny positive form below zero
    Ok(q.max(S::zero()).sqrt())
}

/// p-norm `(Σ|v_i|^p)^(1/p)` for `p > 1`, scaled by the largest entry to
/// avoid overflow.
pub fn p_norm<S: Real>(v: &Vector<S>, p: S) -> Result<S> {
    if !(p > S::one()) {
        return Err(Error::InvalidExponent { p: p.to_f64().unwrap_or(f64::NAN) });
    }
    let m = v.iter().fold(S::zero(), |m, &e| m.max(e.abs()));
    if m == S::zero() {
        return Ok(S::zero());
    }
    let sum = v.iter().fold(S::zero(), |acc, &e| acc + (e.abs() / m).powf(p));
    Ok(m * sum.powf(p.recip()))
}

/// Spectral norm (largest singular value) via power iteration on `AᵀA`.
///
/// The start vector is all-ones perturbed by a fixed-seed RNG so it cannot be
/// orthogonal to the dominant eigenvector; iteration stops when successive
/// Rayleigh quotients agree to 1e−14 relative, or errors out at 10,000
/// iterations.
pub fn spectral_norm<S: Real>(a: &Matrix<S>) -> Result<S> {
    let n = a.cols();
    let g = a.gram();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_5150);
    let mut v: Vec<S> = (0..n)
        .map(|_| S::one() + S::of(rng.gen_range(-1e-3..1e-3)))
        .collect();
    normalize(&mut v);

    let mul = |v: &[S]| -> Vec<S> {
        let mut out = vec![S::zero(); n];
        for i in 0..n {
            let mut acc = S::zero();
            for j in 0..n {
                acc = acc + g[i * n + j] * v[j];
            }
            out[i] = acc;
        }
        out
    };

    let mut rayleigh = S::zero();
    for _ in 0..POWER_MAX_ITER {
        let w = mul(&v);
        let next = dot(&w, &v); // v is unit, so this is the Rayleigh quotient
        let wn = dot(&w, &w).sqrt();
        if wn == S::zero() {
            return Ok(S::zero()); // A is the zero matrix
        }
        let diff = (next - rayleigh).abs();
        rayleigh = next;
        if diff <= S::of(POWER_TOL) * rayleigh.abs().max(S::min_positive_value()) {
            return Ok(rayleigh.max(S::zero()).sqrt());
        }
        v = w;
        let inv = wn.recip();
        for e in &mut v {
            *e = *e * inv;
        }
    }
    Err(Error::NoConvergence { iterations: POWER_MAX_ITER })
}

fn dot<S: Real>(a: &[S], b: &[S]) -> S {
    a.iter().zip(b).fold(S::zero(), |acc, (&x, &y)| acc + x * y)
}

fn normalize<S: Real>(v: &mut [S]) {
    let n = dot(v, v).sqrt();
    if n > S::zero() {
        for e in v.iter_mut() {
            *e = *e / n;
        }
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

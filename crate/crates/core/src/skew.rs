//! Skew-symmetric solutions of `A x = y` for `x^T y = 0`.
//!
//! The pairing is the bilinear one, `x^T y = sum x_j y_j`, never the
//! Hermitian inner product.

use crate::error::{Error, Result};
use crate::numcore::Cx;

/// Default lower bound on `||x||`.
pub const DELTA_MIN: f64 = 1e-8;
/// Default relative orthogonality tolerance.
pub const ORTHO_TOL: f64 = 1e-8;

/// Square matrix with `A[i][j] = -A[j][i]` and zero diagonal. Only the
/// strict upper triangle is stored, so skewness holds by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewMatrix {
    n: usize,
    // row-major strict upper triangle
    upper: Vec<Cx>,
}

impl SkewMatrix {
    pub fn zeros(n: usize) -> Self {
        SkewMatrix { n, upper: vec![Cx::new(0.0, 0.0); n * n.saturating_sub(1) / 2] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.n);
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    pub fn get(&self, i: usize, j: usize) -> Cx {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Cx::new(0.0, 0.0),
            Less => self.upper[self.index(i, j)],
            Greater => -self.upper[self.index(j, i)],
        }
    }

    /// Sets `A[i][j] = v` and `A[j][i] = -v`. Diagonal writes are ignored
    /// unless `v` is zero, in which case they are no-ops.
    pub fn set(&mut self, i: usize, j: usize, v: Cx) {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => debug_assert!(v.norm() == 0.0, "diagonal of a skew matrix is zero"),
            Less => {
                let k = self.index(i, j);
                self.upper[k] = v;
            }
            Greater => {
                let k = self.index(j, i);
                self.upper[k] = -v;
            }
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Cx>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        (2.0 * self.upper.iter().map(|v| v.norm_sqr()).sum::<f64>()).sqrt()
    }

    pub fn add(&self, other: &SkewMatrix) -> Result<SkewMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: other.n });
        }
        Ok(SkewMatrix {
            n: self.n,
            upper: self.upper.iter().zip(&other.upper).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn apply(&self, x: &[Cx]) -> Result<Vec<Cx>> {
        apply(self, x)
    }
}

/// Matrix-vector product.
pub fn apply(a: &SkewMatrix, x: &[Cx]) -> Result<Vec<Cx>> {
    if x.len() != a.n {
        return Err(Error::DimensionMismatch { expected: a.n, got: x.len() });
    }
    Ok((0..a.n)
        .map(|i| (0..a.n).map(|j| a.get(i, j) * x[j]).sum())
        .collect())
}

/// Bilinear pairing `x^T y`.
pub fn bilinear(x: &[Cx], y: &[Cx]) -> Cx {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

pub fn norm(x: &[Cx]) -> f64 {
    x.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
}

/// [`skew_solve_with`] at the default tolerances.
pub fn skew_solve(x: &[Cx], y: &[Cx]) -> Result<SkewMatrix> {
    skew_solve_with(x, y, DELTA_MIN, ORTHO_TOL)
}

/// Builds the skew matrix supported on row and column `k`, where `k` is the
/// first index maximizing `|x_k|`:
/// `A[i][k] = y_i / x_k` and `A[k][j] = -y_j / x_k` for `i, j != k`.
///
/// Rows `i != k` of `A x` are `y_i` identically; row `k` equals
/// `-(x^T y - x_k y_k)/x_k`, which is `y_k` exactly when `x^T y = 0`.
/// `||A||_F <= sqrt(2) ||y|| / |x_k| <= sqrt(2n) ||y|| / ||x||`.
pub fn skew_solve_with(x: &[Cx], y: &[Cx], delta_min: f64, ortho_tol: f64) -> Result<SkewMatrix> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch { expected: x.len(), got: y.len() });
    }
    let nx = norm(x);
    if nx < delta_min {
        return Err(Error::NearZeroPivot(nx));
    }
    let ny = norm(y);
    let pairing = bilinear(x, y).norm();
    if pairing > ortho_tol * nx * ny {
        return Err(Error::NotOrthogonal(pairing / (nx * ny)));
    }
    let n = x.len();
    let mut k = 0;
    for j in 1..n {
        if x[j].norm() > x[k].norm() {
            k = j;
        }
    }
    let mut a = SkewMatrix::zeros(n);
    for i in (0..n).filter(|&i| i != k) {
        a.set(i, k, y[i] / x[k]);
    }
    Ok(a)
}

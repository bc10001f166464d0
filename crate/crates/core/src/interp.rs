//! Hermite interpolation with prescribed jets at the Blaschke zeros.

use nalgebra::{DMatrix, DVector};

use crate::blaschke::{BlaschkeSpec, NODE_SEPARATION_TOL};
use crate::error::{Error, Result};
use crate::numcore::dd::{self, Cdd, DdPoly};
use crate::numcore::{cx, factorial, Cx, Poly};

/// Prescribed derivative values: `values[k][m]` is the target for
/// `p^{(m)}(a_k)`, `0 <= m < m_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct JetTarget {
    values: Vec<Vec<Cx>>,
}

impl JetTarget {
    pub fn new(spec: &BlaschkeSpec, values: Vec<Vec<Cx>>) -> Result<Self> {
        let expected = spec.points().len();
        if values.len() != expected {
            return Err(Error::DimensionMismatch { expected, got: values.len() });
        }
        for (v, &(_, m)) in values.iter().zip(spec.points()) {
            if v.len() != m {
                return Err(Error::DimensionMismatch { expected: m, got: v.len() });
            }
        }
        Ok(JetTarget { values })
    }

    pub fn values(&self) -> &[Vec<Cx>] {
        &self.values
    }
}

fn check_separation(spec: &BlaschkeSpec) -> Result<()> {
    let pts = spec.points();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if (pts[i].0 - pts[j].0).norm() <= NODE_SEPARATION_TOL {
                return Err(Error::NodeCollision(i, j));
            }
        }
    }
    Ok(())
}

/// The Hermite interpolant of degree `<= M - 1` built from the explicit basis
///
/// `P_{k,m}(z) = p_k(z) (z - a_k)^m / m! * sum_{l <= m_k - 1 - m} q_k^{(l)}(a_k)/l! (z - a_k)^l`
///
/// where `p_k = prod_{j != k} (z - a_j)^{m_j}` and `q_k = 1/p_k`. The jet of
/// `q_k` at `a_k` comes from a truncated power-series reciprocal. Assembly
/// runs in double-double and rounds once at the end.
pub fn hermite_interpolate(spec: &BlaschkeSpec, target: &JetTarget) -> Result<Poly> {
    check_separation(spec)?;
    let pts = spec.points();
    let mut out = DdPoly::zero();
    for (k, &(a, mk)) in pts.iter().enumerate() {
        let alphas = &target.values()[k];
        if alphas.iter().all(|v| v.norm() == 0.0) {
            continue;
        }
        let others: Vec<(Cx, usize)> =
            pts.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &p)| p).collect();
        let pk = DdPoly::from_roots(&others);
        let ad = Cdd::from_cx(a);
        let pk_jet = pk.taylor_at(ad, mk - 1);
        if pk_jet[0].to_cx().norm() == 0.0 {
            return Err(Error::SingularSystem);
        }
        let q_jet = dd::series_reciprocal(&pk_jet, mk);
        // powers of (z - a) up to m_k - 1
        let mut shifts = vec![DdPoly::constant(Cdd::ONE)];
        for l in 1..mk {
            shifts.push(shifts[l - 1].mul_linear(ad));
        }
        for (m, &alpha) in alphas.iter().enumerate() {
            if alpha.norm() == 0.0 {
                continue;
            }
            let series = (0..mk - m)
                .fold(DdPoly::zero(), |acc, l| acc.add(&shifts[l].scale(q_jet[l])));
            let basis = pk.mul(&shifts[m]).mul(&series);
            let weight = Cdd::from_cx(alpha).scale(1.0 / factorial(m));
            out = out.add(&basis.scale(weight));
        }
    }
    Ok(out.to_poly())
}

fn vandermonde_rows_dd(spec: &BlaschkeSpec) -> Vec<Vec<Cdd>> {
    let size = spec.total_degree();
    let mut rows = Vec::with_capacity(size);
    for &(a, mk) in spec.points() {
        let a = Cdd::from_cx(a);
        let mut powers = vec![Cdd::ONE];
        for j in 1..size {
            powers.push(powers[j - 1] * a);
        }
        for m in 0..mk {
            let row = (0..size)
                .map(|j| {
                    if j < m {
                        Cdd::ZERO
                    } else {
                        // j!/(j-m)! a^{j-m}, the falling factorial is exact
                        let falling: f64 = ((j - m + 1)..=j).map(|t| t as f64).product();
                        powers[j - m].scale(falling)
                    }
                })
                .collect();
            rows.push(row);
        }
    }
    rows
}

/// Rows of the confluent Vandermonde system: row `(k, m)` holds the
/// coefficients of the functional `c -> (sum_j c_j z^j)^{(m)}(a_k)`.
pub fn confluent_vandermonde_rows(spec: &BlaschkeSpec) -> Vec<Vec<Cx>> {
    vandermonde_rows_dd(spec)
        .into_iter()
        .map(|row| row.into_iter().map(Cdd::to_cx).collect())
        .collect()
}

/// Refinement sweeps in [`hermite_oracle`].
pub const ORACLE_REFINE_STEPS: usize = 6;

/// Independent check of [`hermite_interpolate`]: solves the confluent
/// Vandermonde system by LU with partial pivoting, then refines with
/// residuals accumulated in double-double.
pub fn hermite_oracle(spec: &BlaschkeSpec, target: &JetTarget) -> Result<Poly> {
    let rows = vandermonde_rows_dd(spec);
    let size = rows.len();
    let lu = DMatrix::from_fn(size, size, |i, j| rows[i][j].to_cx()).lu();
    let rhs: Vec<Cx> = target.values().iter().flatten().copied().collect();
    let mut x = vec![Cdd::ZERO; size];
    let mut residual = DVector::from_column_slice(&rhs);
    for _ in 0..=ORACLE_REFINE_STEPS {
        let step = lu.solve(&residual).ok_or(Error::SingularSystem)?;
        if step.iter().any(|v| !crate::numcore::is_finite(*v)) {
            return Err(Error::SingularSystem);
        }
        for (xi, &d) in x.iter_mut().zip(step.iter()) {
            *xi = *xi + Cdd::from_cx(d);
        }
        residual = DVector::from_iterator(
            size,
            rows.iter().zip(&rhs).map(|(row, &b)| {
                let ax = row.iter().zip(&x).fold(Cdd::ZERO, |acc, (&r, &xj)| acc + r * xj);
                (Cdd::from_cx(b) - ax).to_cx()
            }),
        );
    }
    Ok(Poly::new(x.into_iter().map(Cdd::to_cx).collect()))
}

/// Convenience: targets from plain real values.
pub fn real_target(spec: &BlaschkeSpec, values: &[&[f64]]) -> Result<JetTarget> {
    JetTarget::new(
        spec,
        values.iter().map(|v| v.iter().map(|&x| cx(x, 0.0)).collect()).collect(),
    )
}

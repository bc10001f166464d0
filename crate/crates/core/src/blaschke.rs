//! Finite Blaschke products and membership in `C + B H^inf`.
//!
//! A function `f` belongs to the algebra iff it takes the same value at
//! every zero `a_k` of `B` and its derivatives of order `1..m_k` vanish
//! there. Equivalently `f = c + B h` with `h` holomorphic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numcore::{cx, Cx, Poly, RationalFn};

/// Zeros closer than this must be merged into one higher-multiplicity zero.
pub const NODE_SEPARATION_TOL: f64 = 1e-6;

/// Zeros `a_k` with multiplicities `m_k`. `points[0]` is the base point
/// `a_1` that fixes the constant part of a member.
#[derive(Debug, Clone, PartialEq)]
pub struct BlaschkeSpec {
    points: Vec<(Cx, usize)>,
}

impl BlaschkeSpec {
    pub fn new(points: Vec<(Cx, usize)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidSpec("at least one zero is required".into()));
        }
        for (k, &(a, m)) in points.iter().enumerate() {
            if !crate::numcore::is_finite(a) {
                return Err(Error::NonFinite("Blaschke zero"));
            }
            if a.norm() >= 1.0 {
                return Err(Error::InvalidSpec(format!("zero {k} = {a} is not inside the disk")));
            }
            if m == 0 {
                return Err(Error::InvalidSpec(format!("zero {k} has multiplicity 0")));
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if (points[i].0 - points[j].0).norm() <= NODE_SEPARATION_TOL {
                    return Err(Error::NodeCollision(i, j));
                }
            }
        }
        Ok(BlaschkeSpec { points })
    }

    /// A single zero of multiplicity `m`.
    pub fn single(a: Cx, m: usize) -> Result<Self> {
        Self::new(vec![(a, m)])
    }

    pub fn points(&self) -> &[(Cx, usize)] {
        &self.points
    }

    pub fn base_point(&self) -> Cx {
        self.points[0].0
    }

    /// Total degree `M = sum m_k`.
    pub fn total_degree(&self) -> usize {
        self.points.iter().map(|p| p.1).sum()
    }

    /// `prod (z - a_k)^{m_k}`, monic of degree `M`.
    pub fn zero_polynomial(&self) -> Poly {
        Poly::from_roots(&self.points)
    }
}

/// `B = prod ((|a_k|/a_k) (a_k - z)/(1 - conj(a_k) z))^{m_k}`, with the
/// unimodular prefactor replaced by `-1` at `a_k = 0`.
pub fn build_blaschke(spec: &BlaschkeSpec) -> RationalFn {
    let mut num = Poly::one();
    let mut den = Poly::one();
    for &(a, m) in spec.points() {
        let unit = if a.norm() == 0.0 { cx(-1.0, 0.0) } else { cx(a.norm(), 0.0) / a };
        let top = Poly::new(vec![unit * a, -unit]);
        let bottom = Poly::new(vec![cx(1.0, 0.0), -a.conj()]);
        for _ in 0..m {
            num = &num * &top;
            den = &den * &bottom;
        }
    }
    // zeros of den are 1/conj(a_k), outside the closed disk
    RationalFn::new(num, den).expect("Blaschke denominator is zero-free on the closed disk")
}

/// Defects of the two membership conditions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MembershipReport {
    /// `c = f(a_1)`.
    pub base_value: Cx,
    /// `max_k |f(a_k) - f(a_1)|`.
    pub a1_defect: f64,
    /// `max_{k, 1 <= m < m_k} |f^{(m)}(a_k)|`.
    pub jet_defect: f64,
    pub tol: f64,
    pub passed: bool,
}

impl MembershipReport {
    pub fn max_defect(&self) -> f64 {
        self.a1_defect.max(self.jet_defect)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max_defect() <= tol
    }
}

pub fn check_membership(f: &RationalFn, spec: &BlaschkeSpec, tol: f64) -> MembershipReport {
    let base = f.value(spec.base_point());
    let mut a1_defect: f64 = 0.0;
    let mut jet_defect: f64 = 0.0;
    for &(a, m) in spec.points() {
        let jets = f.derivatives_at(a, m - 1);
        a1_defect = a1_defect.max((jets[0] - base).norm());
        for d in &jets[1..] {
            jet_defect = jet_defect.max(d.norm());
        }
    }
    let passed = a1_defect.max(jet_defect) <= tol;
    MembershipReport { base_value: base, a1_defect, jet_defect, tol, passed }
}

/// Splits a member as `f = c + B h`. Membership is decided by
/// [`check_membership`] at `tol`; the division remainder is then roundoff
/// and is dropped.
pub fn decompose(f: &RationalFn, spec: &BlaschkeSpec, tol: f64) -> Result<(Cx, RationalFn)> {
    let report = check_membership(f, spec, tol);
    if !report.passed {
        return Err(Error::NotAMember(format!(
            "value defect {:.3e}, jet defect {:.3e} exceed {tol:.1e}",
            report.a1_defect, report.jet_defect
        )));
    }
    let c = report.base_value;
    let shifted = f.num() - &f.den().scale(c);
    let (quot, _) = shifted.div_rem(&spec.zero_polynomial())?;
    // B = lambda * zeros / B_den, so (f - c)/B = quot * B_den / (lambda * den)
    let b = build_blaschke(spec);
    let lambda = b.num().leading();
    // cancel B_den when it divides den, as it does for members built as c + B q
    let (extra, rest) = f.den().div_rem(b.den())?;
    let h = if rest.max_abs() <= 1e-14 * f.den().max_abs() {
        if extra.is_constant() {
            RationalFn::from_poly(quot.scale((lambda * extra.coeff(0)).inv()))
        } else {
            RationalFn::new(quot, extra.scale(lambda))?
        }
    } else {
        RationalFn::new(&quot * b.den(), f.den().scale(lambda))?
    };
    Ok((c, h))
}

/// `c + B h`.
pub fn recompose(c: Cx, h: &RationalFn, spec: &BlaschkeSpec) -> Result<RationalFn> {
    Ok(build_blaschke(spec).mul(h)?.add_const(c))
}

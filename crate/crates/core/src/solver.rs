//! Bezout solvers: `sum g_k f_k = 1`.
//!
//! * [`bezout_unconstrained`] finds some solution holomorphic on the closed
//!   disk by polynomial Euclid and a minimum-norm
//!   cofactor solve; it stands in for a Carleson solution.
//! * [`constrained_solve`] corrects that solution by `H f` with `H` a skew
//!   matrix of interpolating polynomials so that every `g_k` lands in
//!   `C + B H^inf`.
//! * [`ideal_solve`] uses the explicit formulas available when the
//!   algebra is `C + I` for an ideal `I`, here `I = B H^inf`.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::blaschke::{check_membership, BlaschkeSpec, MembershipReport};
use crate::error::{Error, Result};
use crate::interp::{hermite_interpolate, JetTarget};
use crate::numcore::{certify_nonvanishing, poly_ext_gcd, GcdResult, Cx, Poly, RationalFn, CERT_SAMPLES};
use crate::skew::{self, skew_solve_with, SkewMatrix, DELTA_MIN};
use crate::verify::{corona_delta, residual, sup_norm, sup_sum, GridConfig};

/// Corona data in the algebra.
#[derive(Debug, Clone)]
pub struct CoronaInstance {
    pub f: Vec<RationalFn>,
    pub spec: BlaschkeSpec,
    pub delta_claimed: Option<f64>,
}

impl CoronaInstance {
    /// Rejects empty data and functions failing membership at `tol`.
    pub fn new(
        f: Vec<RationalFn>,
        spec: BlaschkeSpec,
        delta_claimed: Option<f64>,
        tol: f64,
    ) -> Result<Self> {
        if f.is_empty() {
            return Err(Error::Input("corona data needs at least one function".into()));
        }
        if let Some(d) = delta_claimed {
            if !(d >= 0.0) {
                return Err(Error::Input(format!("delta_claimed must be >= 0, got {d}")));
            }
        }
        for (k, fk) in f.iter().enumerate() {
            let r = check_membership(fk, &spec, tol);
            if !r.passed {
                return Err(Error::NotAMember(format!(
                    "f[{k}]: value defect {:.3e}, jet defect {:.3e}",
                    r.a1_defect, r.jet_defect
                )));
            }
        }
        Ok(CoronaInstance { f, spec, delta_claimed })
    }

    pub fn len(&self) -> usize {
        self.f.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveConfig {
    pub grid: GridConfig,
    /// Membership tolerance for inputs and outputs.
    pub tol: f64,
    /// Relative tolerance for the orthogonality facts feeding the skew solves.
    pub ortho_tol: f64,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig { grid: GridConfig::default(), tol: 1e-8, ortho_tol: 1e-9 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverPath {
    Constrained,
    Ideal,
}

/// Entry `h_ij` (`i < j`) of the correction matrix `H`.
#[derive(Debug, Clone)]
pub struct CorrectionEntry {
    pub i: usize,
    pub j: usize,
    pub h: Poly,
}

/// Measured data for the explicit ideal-algebra solution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IdealBound {
    /// Index of the function whose constant part was used as `c_1`.
    pub pivot: usize,
    pub pivot_constant: Cx,
    pub max_gtilde_norm: f64,
    pub max_f_norm: f64,
    /// `n/delta + (2n/delta) max_j ||g~_j||`.
    pub bound: f64,
    pub max_g_norm: f64,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub path: SolverPath,
    pub cofactors: CofactorMethod,
    /// Extra correction passes applied to `g`.
    pub refinements: usize,
    pub g: Vec<RationalFn>,
    /// `sup |sum g_k f_k - 1|` over the boundary grid.
    pub residual: f64,
    pub membership_defects: Vec<MembershipReport>,
    pub g_norms: Vec<f64>,
    /// `max_ij ||h_ij||_inf`; zero on the ideal path.
    pub correction_norm: f64,
    pub correction: Vec<CorrectionEntry>,
    pub delta_measured: f64,
    /// `sup sum |f_k|`; the normalization `<= 1` is measured, not enforced.
    pub f_sum_sup: f64,
    pub ideal_bound: Option<IdealBound>,
}

impl SolveReport {
    pub fn max_defect(&self) -> f64 {
        self.membership_defects.iter().map(|m| m.max_defect()).fold(0.0, f64::max)
    }

    pub fn max_g_norm(&self) -> f64 {
        self.g_norms.iter().copied().fold(0.0, f64::max)
    }

    /// Larger of the residual and the worst membership defect.
    pub fn quality(&self) -> f64 {
        self.residual.max(self.max_defect())
    }

    /// Residual and every membership defect within `tol`.
    pub fn succeeded(&self, tol: f64) -> bool {
        self.residual <= tol && self.max_defect() <= tol
    }
}

fn same_poly(a: &Poly, b: &Poly) -> bool {
    a.degree() == b.degree() && a.max_coeff_diff(b) <= 1e-14 * a.max_abs().max(1.0)
}

/// Common denominator `Q` (product of the distinct denominators) and the
/// numerators `f_k Q`.
fn clear_denominators(f: &[RationalFn]) -> (Poly, Vec<Poly>) {
    let mut distinct: Vec<Poly> = Vec::new();
    let mut class = Vec::with_capacity(f.len());
    for fk in f {
        match distinct.iter().position(|d| same_poly(d, fk.den())) {
            Some(i) => class.push(i),
            None => {
                class.push(distinct.len());
                distinct.push(fk.den().clone());
            }
        }
    }
    let q = distinct.iter().fold(Poly::one(), |acc, d| &acc * d);
    let nums = f
        .iter()
        .zip(&class)
        .map(|(fk, &c)| {
            distinct
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != c)
                .fold(fk.num().clone(), |acc, (_, d)| &acc * d)
        })
        .collect();
    (q, nums)
}

/// Extra cofactor degree, beyond the largest input degree, offered to the
/// minimum-norm solve.
pub const COFACTOR_SLACK: usize = 8;


/// Minimum coefficient-norm `w` with `sum w_k r_k = rhs` and
/// `deg w_k <= max(deg r, deg rhs) + slack`, from the SVD of the generalized
/// Sylvester matrix. `None` when the system is numerically inconsistent.
fn min_norm_cofactors(rs: &[Poly], rhs: &Poly, slack: usize) -> Option<Vec<Poly>> {
    let top = rs.iter().map(|r| if r.is_zero() { 0 } else { r.degree() }).max()?;
    let dw = top.max(rhs.degree()) + slack;
    let rows = dw + top + 1;
    let cols = rs.len() * (dw + 1);
    let a = DMatrix::from_fn(rows, cols, |i, col| {
        let (k, j) = (col / (dw + 1), col % (dw + 1));
        if i >= j { rs[k].coeff(i - j) } else { Cx::new(0.0, 0.0) }
    });
    let b = DVector::from_fn(rows, |i, _| rhs.coeff(i));
    let svd = a.clone().svd(true, true);
    let cutoff = 1e-14 * svd.singular_values.max();
    let x = svd.solve(&b, cutoff).ok()?;
    let misfit = (&a * &x - &b).iter().map(|v| v.norm()).fold(0.0, f64::max);
    if !(misfit <= 1e-10 * rhs.max_abs()) {
        return None;
    }
    Some((0..rs.len()).map(|k| Poly::new(x.rows(k * (dw + 1), dw + 1).iter().copied().collect())).collect())
}

/// How the unconstrained cofactors are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CofactorMethod {
    /// Euclid's cofactors (minimal degree for two functions).
    Euclid,
    /// Minimum coefficient norm of `g0` among bounded-degree solutions.
    MinNorm,
}

/// [`bezout_with`] using Euclid's cofactors.
pub fn bezout_unconstrained(f: &[RationalFn]) -> Result<Vec<RationalFn>> {
    bezout_with(f, CofactorMethod::Euclid)
}

/// Some solution of `sum g0_k f_k = 1` holomorphic on the closed disk.
///
/// With `f_k = P_k / Q`, Euclid decides `d = gcd(P_k)`; `d` must have no zero
/// in the closed disk, i.e. the data has no common zero there. With
/// `P_k = d R_k` and `sum u_k R_k = 1`, the answer is `g0_k = u_k Q / d`.
pub fn bezout_with(f: &[RationalFn], method: CofactorMethod) -> Result<Vec<RationalFn>> {
    if f.is_empty() {
        return Err(Error::Input("corona data needs at least one function".into()));
    }
    let (q, nums) = clear_denominators(f);
    let gcd = gcd_any_order(&nums)?;
    let d = gcd.gcd;
    if !d.is_constant() {
        certify_nonvanishing(&d, CERT_SAMPLES).map_err(|e| {
            Error::NoSolution(format!(
                "common factor of degree {} vanishes in the closed disk ({e})",
                d.degree()
            ))
        })?;
    }
    let reduced = |ps: &[Poly]| -> Result<Vec<Poly>> {
        if d.is_constant() {
            Ok(ps.iter().map(|p| p.scale(d.coeff(0).inv())).collect())
        } else {
            ps.iter().map(|p| p.div_rem(&d).map(|(r, _)| r)).collect()
        }
    };
    match method {
        // sum u P = d, g0 = u Q / d
        CofactorMethod::Euclid => gcd
            .cofactors
            .iter()
            .map(|u| {
                if d.is_constant() && q.is_constant() {
                    Ok(RationalFn::from_poly(u.scale(q.coeff(0) / d.coeff(0))))
                } else {
                    RationalFn::new(u * &q, d.clone())
                }
            })
            .collect(),
        // sum w R = Q with R = P / d, g0 = w / d
        CofactorMethod::MinNorm => {
            let rs = reduced(&nums)?;
            let ws = min_norm_cofactors(&rs, &q, COFACTOR_SLACK).ok_or(Error::SingularSystem)?;
            ws.into_iter()
                .map(|w| {
                    if d.is_constant() {
                        Ok(RationalFn::from_poly(w.scale(d.coeff(0).inv())))
                    } else {
                        RationalFn::new(w, d.clone())
                    }
                })
                .collect()
        }
    }
}

/// Euclid on `ps`, then on its rotations while the degree rule lands in
/// its ambiguity band. Cofactors are returned in the original order.
fn gcd_any_order(ps: &[Poly]) -> Result<GcdResult> {
    let mut first_err = None;
    for r in 0..ps.len() {
        let rotated: Vec<Poly> = ps[r..].iter().chain(&ps[..r]).cloned().collect();
        match poly_ext_gcd(&rotated) {
            Ok(mut g) => {
                g.cofactors.rotate_right(r);
                return Ok(g);
            }
            Err(e @ Error::IllConditioned(_)) => {
                first_err.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
    }
    Err(first_err.expect("at least one ordering was tried"))
}

/// Runs `solve` with Euclid's cofactors and, unless that lands well inside
/// `tol`, again with minimum-norm cofactors; keeps the better report.
fn with_fallback<F>(tol: f64, solve: F) -> Result<SolveReport>
where
    F: Fn(CofactorMethod) -> Result<SolveReport>,
{
    let first = solve(CofactorMethod::Euclid);
    match &first {
        Ok(r) if r.quality() <= 1e-3 * tol => return first,
        Err(Error::NoSolution(_)) => return first,
        _ => {}
    }
    let second = solve(CofactorMethod::MinNorm);
    match (first, second) {
        (Ok(a), Ok(b)) => Ok(if b.quality() < a.quality() { b } else { a }),
        (Ok(a), Err(_)) => Ok(a),
        (Err(_), second) => second,
    }
}

/// Infimum estimate of `sum |f_k|`: grid minimum, also taken over the
/// Blaschke zeros themselves.
pub fn measured_delta(f: &[RationalFn], spec: &BlaschkeSpec, grid: &GridConfig) -> f64 {
    spec.points()
        .iter()
        .map(|&(a, _)| f.iter().map(|fk| fk.value(a).norm()).sum::<f64>())
        .fold(corona_delta(f, grid), f64::min)
}

/// Removes the tiny violation of `x^T y = 0` left by roundoff, after checking
/// that it really is tiny relative to `scale`.
fn orthogonalize(
    x: &[Cx],
    y: &[Cx],
    scale: f64,
    ortho_tol: f64,
    node: usize,
    order: usize,
) -> Result<Vec<Cx>> {
    let pairing = skew::bilinear(x, y);
    let nx = skew::norm(x);
    if pairing.norm() > ortho_tol * (nx * scale).max(1.0) {
        return Err(Error::OrthogonalityViolated { node, order, pairing: pairing.norm() });
    }
    // y - (x^T y / ||x||^2) conj(x) has zero bilinear pairing with x
    let coef = pairing / (nx * nx);
    Ok(y.iter().zip(x).map(|(yi, xi)| yi - coef * xi.conj()).collect())
}

/// Skew solve for a right-hand side already passed through [`orthogonalize`].
/// The pairing was checked there against the unprojected scale; a projected
/// `y` near zero would fail a check relative to `||y||` on roundoff alone.
fn projected_solve(x: &[Cx], y: &[Cx]) -> Result<SkewMatrix> {
    skew_solve_with(x, y, DELTA_MIN, f64::INFINITY)
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// The skew matrices `A_{a_k}^{(m)}`, indexed `[k][m]`.
fn correction_jets(
    f_jets: &[Vec<Vec<Cx>>],
    g_jets: &[Vec<Vec<Cx>>],
    spec: &BlaschkeSpec,
    cfg: &SolveConfig,
) -> Result<Vec<Vec<SkewMatrix>>> {
    let n = f_jets[0].len();
    // f_jets[k][i][m] = f_i^{(m)}(a_k)
    let value_vec = |jets: &[Vec<Vec<Cx>>], k: usize, m: usize| -> Vec<Cx> {
        (0..n).map(|i| jets[k][i][m]).collect()
    };
    let x1 = value_vec(f_jets, 0, 0);
    let g1 = value_vec(g_jets, 0, 0);
    let a1 = SkewMatrix::zeros(n);
    let mut out = Vec::with_capacity(spec.points().len());
    for (k, &(_, mk)) in spec.points().iter().enumerate() {
        let mut per_order = Vec::with_capacity(mk);
        if k == 0 {
            per_order.push(a1.clone());
        } else {
            let gk = value_vec(g_jets, k, 0);
            let y: Vec<Cx> = g1.iter().zip(&gk).map(|(a, b)| a - b).collect();
            let scale = skew::norm(&g1) + skew::norm(&gk);
            let y = orthogonalize(&x1, &y, scale, cfg.ortho_tol, k, 0)?;
            per_order.push(projected_solve(&x1, &y)?.add(&a1)?);
        }
        let xk = value_vec(f_jets, k, 0);
        for m in 1..mk {
            let y: Vec<Cx> = value_vec(g_jets, k, m).into_iter().map(|v| -v).collect();
            // Leibniz: the pairing is a sum of terms g0^{(m-j)} . f^{(j)}
            let scale = (0..=m)
                .map(|j| binomial(m, j) * skew::norm(&value_vec(g_jets, k, m - j)))
                .sum::<f64>();
            let y = orthogonalize(&xk, &y, scale, cfg.ortho_tol, k, m)?;
            per_order.push(projected_solve(&xk, &y)?);
        }
        out.push(per_order);
    }
    Ok(out)
}

fn membership_and_norms(
    g: &[RationalFn],
    spec: &BlaschkeSpec,
    cfg: &SolveConfig,
) -> (Vec<MembershipReport>, Vec<f64>) {
    let defects = g.iter().map(|gk| check_membership(gk, spec, cfg.tol)).collect();
    let norms = g.iter().map(|gk| sup_norm(gk, &cfg.grid)).collect();
    (defects, norms)
}

/// Solution in the algebra by the skew correction `g = g0 + H f`.
///
/// 1. `g0` from [`bezout_unconstrained`].
/// 2. `A_{a_1}^{(0)} = 0`.
/// 3. `A_{a_k}^{(0)} x = g0(a_1) - g0(a_k)` with `x = f(a_1)`.
/// 4. `A_{a_k}^{(m)} f(a_k) = -g0^{(m)}(a_k)` for `1 <= m < m_k`.
/// 5. `h_ij` interpolates the `(i, j)` entries of all `A_{a_k}^{(m)}`.
/// 6. `g = g0 + H f`.
///
/// Euclid's `g0` is tried first; see [`CofactorMethod`].
pub fn constrained_solve(inst: &CoronaInstance, cfg: &SolveConfig) -> Result<SolveReport> {
    with_fallback(cfg.tol, |method| constrained_with(inst, cfg, method))
}

/// One skew correction: `g = g0 + H f` with `H` interpolating the
/// matrices from [`correction_jets`].
fn skew_correction(
    f: &[RationalFn],
    spec: &BlaschkeSpec,
    g0: &[RationalFn],
    cfg: &SolveConfig,
) -> Result<(Vec<RationalFn>, Vec<CorrectionEntry>)> {
    let n = f.len();
    let jets = |funcs: &[RationalFn]| -> Vec<Vec<Vec<Cx>>> {
        spec.points()
            .iter()
            .map(|&(a, mk)| funcs.iter().map(|fi| fi.derivatives_at(a, mk - 1)).collect())
            .collect()
    };
    let a = correction_jets(&jets(f), &jets(g0), spec, cfg)?;

    let mut correction = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let values = a.iter().map(|per| per.iter().map(|m| m.get(i, j)).collect()).collect();
            let target = JetTarget::new(spec, values)?;
            correction.push(CorrectionEntry { i, j, h: hermite_interpolate(spec, &target)? });
        }
    }
    let h_at = |i: usize, j: usize| -> Option<(Poly, bool)> {
        if i == j {
            return None;
        }
        let (lo, hi, neg) = if i < j { (i, j, false) } else { (j, i, true) };
        let e = correction.iter().find(|e| e.i == lo && e.j == hi)?;
        Some((e.h.clone(), neg))
    };

    // g_i = g0_i + sum_j H_ij P_j / Q with f_j = P_j / Q
    let (q, nums) = clear_denominators(f);
    let mut g = Vec::with_capacity(n);
    for i in 0..n {
        let mut hf = Poly::zero();
        for (j, pj) in nums.iter().enumerate() {
            if let Some((h, neg)) = h_at(i, j) {
                let term = &h * pj;
                hf = if neg { hf - term } else { hf + term };
            }
        }
        let gi = if hf.is_zero() {
            g0[i].clone()
        } else if q.is_constant() {
            g0[i].add(&RationalFn::from_poly(hf.scale(q.coeff(0).inv())))?
        } else {
            let corr = RationalFn::new(hf, q.clone())?;
            g0[i].add(&corr)?
        };
        g.push(gi);
    }
    Ok((g, correction))
}

fn max_defect_of(g: &[RationalFn], spec: &BlaschkeSpec, tol: f64) -> f64 {
    g.iter().map(|gk| check_membership(gk, spec, tol).max_defect()).fold(0.0, f64::max)
}

fn constrained_with(inst: &CoronaInstance, cfg: &SolveConfig, method: CofactorMethod) -> Result<SolveReport> {
    let f = &inst.f;
    let spec = &inst.spec;
    let g0 = bezout_with(f, method)?;
    let (mut g, mut correction) = skew_correction(f, spec, &g0, cfg)?;

    // the correction is linear in g0, so a second pass on g removes most of
    // the roundoff left by the first
    let mut refinements = 0;
    let before = max_defect_of(&g, spec, cfg.tol);
    if before > 1e-3 * cfg.tol {
        if let Ok((g2, c2)) = skew_correction(f, spec, &g, cfg) {
            if max_defect_of(&g2, spec, cfg.tol) < before {
                for (e, e2) in correction.iter_mut().zip(c2) {
                    e.h = &e.h + &e2.h;
                }
                g = g2;
                refinements = 1;
            }
        }
    }

    let (membership_defects, g_norms) = membership_and_norms(&g, spec, cfg);
    let correction_norm = correction
        .iter()
        .map(|e| sup_norm(&RationalFn::from_poly(e.h.clone()), &cfg.grid))
        .fold(0.0, f64::max);
    Ok(SolveReport {
        path: SolverPath::Constrained,
        cofactors: method,
        refinements,
        residual: residual(f, &g, &cfg.grid)?,
        g,
        membership_defects,
        g_norms,
        correction_norm,
        correction,
        delta_measured: measured_delta(f, spec, &cfg.grid),
        f_sum_sup: sup_sum(f, &cfg.grid),
        ideal_bound: None,
    })
}

/// Solution through the explicit formulas for `C + I`, `I = B H^inf`.
///
/// Write `f_k = c_k + phi_k` with `c_k = f_k(a_1)` and pivot on the
/// largest `|c_k|` (call it `c_1`). From an unconstrained solution `g~`,
/// `1 = (f_1 - phi_1 sum_k f_k g~_k) / c_1`, i.e.
/// `g_1 = (1 - g~_1 phi_1)/c_1` and `g_k = -g~_k phi_1 / c_1` for `k != 1`.
pub fn ideal_solve(inst: &CoronaInstance, cfg: &SolveConfig) -> Result<SolveReport> {
    with_fallback(cfg.tol, |method| ideal_with(inst, cfg, method))
}

fn ideal_with(inst: &CoronaInstance, cfg: &SolveConfig, method: CofactorMethod) -> Result<SolveReport> {
    let f = &inst.f;
    let spec = &inst.spec;
    let n = f.len();
    let base = spec.base_point();
    let constants: Vec<Cx> = f.iter().map(|fk| fk.value(base)).collect();
    let mut pivot = 0;
    for k in 1..n {
        if constants[k].norm() > constants[pivot].norm() {
            pivot = k;
        }
    }
    let c1 = constants[pivot];
    if c1.norm() < cfg.tol {
        return Err(Error::AllConstantsZero);
    }
    let gt = bezout_with(f, method)?;
    let phi = f[pivot].add_const(-c1);
    let inv = c1.inv();
    let mut g = Vec::with_capacity(n);
    for (k, gtk) in gt.iter().enumerate() {
        let prod = gtk.mul(&phi)?;
        let gk = if k == pivot {
            prod.scale(-inv).add_const(inv)
        } else {
            prod.scale(-inv)
        };
        g.push(gk);
    }

    let (membership_defects, g_norms) = membership_and_norms(&g, spec, cfg);
    let delta = measured_delta(f, spec, &cfg.grid);
    let max_gtilde_norm = gt.iter().map(|x| sup_norm(x, &cfg.grid)).fold(0.0, f64::max);
    let max_f_norm = f.iter().map(|x| sup_norm(x, &cfg.grid)).fold(0.0, f64::max);
    let nf = n as f64;
    let bound = nf / delta + 2.0 * nf / delta * max_gtilde_norm;
    let max_g_norm = g_norms.iter().copied().fold(0.0, f64::max);
    Ok(SolveReport {
        path: SolverPath::Ideal,
        cofactors: method,
        refinements: 0,
        residual: residual(f, &g, &cfg.grid)?,
        g,
        membership_defects,
        g_norms,
        correction_norm: 0.0,
        correction: Vec::new(),
        delta_measured: delta,
        f_sum_sup: sup_sum(f, &cfg.grid),
        ideal_bound: Some(IdealBound {
            pivot,
            pivot_constant: c1,
            max_gtilde_norm,
            max_f_norm,
            bound,
            max_g_norm,
            holds: max_g_norm <= bound,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::cx;

    fn poly(c: &[f64]) -> RationalFn {
        RationalFn::from_poly(Poly::real(c))
    }

    fn z2() -> BlaschkeSpec {
        BlaschkeSpec::single(cx(0.0, 0.0), 2).unwrap()
    }

    fn assert_poly(f: &RationalFn, expect: &[f64], tol: f64) {
        assert!(f.is_polynomial(), "{f:?}");
        let p = f.num().scale(f.den().coeff(0).inv());
        assert!(p.max_coeff_diff(&Poly::real(expect)) <= tol, "{p:?} vs {expect:?}");
    }

    #[test]
    fn unconstrained_examples() {
        let g = bezout_unconstrained(&[poly(&[0.0, 0.0, 1.0]), poly(&[1.0, 0.0, 0.0, -1.0])]).unwrap();
        assert_poly(&g[0], &[0.0, 1.0], 0.0);
        assert_poly(&g[1], &[1.0], 0.0);
        let g = bezout_unconstrained(&[poly(&[1.0])]).unwrap();
        assert_poly(&g[0], &[1.0], 0.0);
        let g = bezout_unconstrained(&[poly(&[0.0, 1.0]), poly(&[1.0, -1.0])]).unwrap();
        assert_poly(&g[0], &[1.0], 0.0);
        assert_poly(&g[1], &[1.0], 0.0);
    }

    #[test]
    fn unconstrained_common_zero_is_no_solution() {
        let r = bezout_unconstrained(&[poly(&[0.0, 0.0, 1.0]), poly(&[0.0, 0.0, 0.0, 1.0])]);
        assert!(matches!(r, Err(Error::NoSolution(_))));
    }

    #[test]
    fn unconstrained_common_factor_outside_disk() {
        // common factor (z - 2) is harmless
        let f = [poly(&[-2.0, 1.0]), Poly::real(&[-2.0, 1.0]).mul_linear(cx(0.0, 0.0)).into()];
        let g = bezout_unconstrained(&f).unwrap();
        let r = residual(&f, &g, &GridConfig::default()).unwrap();
        assert!(r < 1e-12, "{r}");
    }

    #[test]
    fn unconstrained_with_denominators() {
        let f = [
            RationalFn::new(Poly::real(&[0.0, 1.0]), Poly::real(&[2.0, -1.0])).unwrap(),
            RationalFn::new(Poly::real(&[1.0, 0.5]), Poly::real(&[3.0, 0.0, 1.0])).unwrap(),
        ];
        let g = bezout_unconstrained(&f).unwrap();
        assert!(residual(&f, &g, &GridConfig::default()).unwrap() < 1e-12);
    }

    #[test]
    fn worked_example() {
        let inst = CoronaInstance::new(
            vec![poly(&[0.0, 0.0, 1.0]), poly(&[1.0, 0.0, 0.0, -1.0])],
            z2(),
            None,
            1e-12,
        )
        .unwrap();
        let rep = constrained_solve(&inst, &SolveConfig::default()).unwrap();
        assert_poly(&rep.g[0], &[0.0, 0.0, 0.0, 0.0, 1.0], 1e-12);
        assert_poly(&rep.g[1], &[1.0, 0.0, 0.0, 1.0], 1e-12);
        assert_eq!(rep.correction.len(), 1);
        assert!(rep.correction[0].h.max_coeff_diff(&Poly::real(&[0.0, -1.0])) < 1e-15);
        assert!(rep.residual <= 1e-12);
        assert!(rep.max_defect() <= 1e-12);
    }

    #[test]
    fn constant_data_needs_no_correction() {
        let spec = BlaschkeSpec::new(vec![(cx(0.2, 0.1), 2), (cx(-0.4, 0.0), 1)]).unwrap();
        let inst = CoronaInstance::new(vec![poly(&[2.0]), poly(&[-1.0])], spec, None, 1e-12).unwrap();
        let rep = constrained_solve(&inst, &SolveConfig::default()).unwrap();
        assert_eq!(rep.correction_norm, 0.0);
        assert!(rep.residual < 1e-15);
    }

    #[test]
    fn already_member_solution() {
        let inst = CoronaInstance::new(
            vec![poly(&[0.0, 0.0, 1.0]), poly(&[1.0, 0.0, -0.5])],
            z2(),
            None,
            1e-12,
        )
        .unwrap();
        let rep = constrained_solve(&inst, &SolveConfig::default()).unwrap();
        assert_poly(&rep.g[0], &[0.5], 1e-15);
        assert_poly(&rep.g[1], &[1.0], 1e-15);
        assert_eq!(rep.correction_norm, 0.0);
    }

    #[test]
    fn ideal_examples() {
        let cfg = SolveConfig::default();
        let inst = CoronaInstance::new(
            vec![poly(&[1.0, 0.0, -0.5]), poly(&[0.0, 0.0, 1.0])],
            z2(),
            None,
            1e-12,
        )
        .unwrap();
        let rep = ideal_solve(&inst, &cfg).unwrap();
        assert_poly(&rep.g[0], &[1.0, 0.0, 0.5], 1e-15);
        assert_poly(&rep.g[1], &[0.0, 0.0, 0.25], 1e-15);
        assert!(rep.ideal_bound.unwrap().holds);

        let inst = CoronaInstance::new(vec![poly(&[1.0])], z2(), None, 1e-12).unwrap();
        let rep = ideal_solve(&inst, &cfg).unwrap();
        assert_poly(&rep.g[0], &[1.0], 0.0);

        let inst =
            CoronaInstance::new(vec![poly(&[1.0]), poly(&[0.0, 0.0, 1.0])], z2(), None, 1e-12).unwrap();
        let rep = ideal_solve(&inst, &cfg).unwrap();
        assert_poly(&rep.g[0], &[1.0], 0.0);
        assert!(rep.g[1].is_zero());
    }

    #[test]
    fn ideal_pivot_with_non_unit_constant() {
        // c_1 = 2 exercises the 1/c_1 factor on g_1
        let inst = CoronaInstance::new(
            vec![poly(&[2.0, 0.0, 1.0]), poly(&[0.0, 0.0, 1.0])],
            z2(),
            None,
            1e-12,
        )
        .unwrap();
        let rep = ideal_solve(&inst, &SolveConfig::default()).unwrap();
        assert!(rep.residual < 1e-12);
        assert!(rep.max_defect() < 1e-12);
    }

    #[test]
    fn ideal_all_constants_zero() {
        let inst = CoronaInstance::new(
            vec![poly(&[0.0, 0.0, 1.0]), poly(&[0.0, 0.0, 0.0, 1.0])],
            z2(),
            None,
            1e-12,
        )
        .unwrap();
        assert!(matches!(
            ideal_solve(&inst, &SolveConfig::default()),
            Err(Error::AllConstantsZero)
        ));
    }

    #[test]
    fn non_member_input_rejected() {
        let r = CoronaInstance::new(vec![poly(&[0.0, 1.0])], z2(), None, 1e-12);
        assert!(matches!(r, Err(Error::NotAMember(_))));
    }
}

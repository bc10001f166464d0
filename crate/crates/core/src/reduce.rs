//! Stable-rank-one reductions of unimodular pairs.
//!
//! Given `(f, g)` unimodular in the algebra, look for `h` in the algebra
//! with `f + h g` invertible. With `a = f(a_1)`:
//!
//! * `a != 0`: search `h` directly;
//! * `a = 0`: `(f + g, g)` is unimodular with witness `(x, y - x)`; reduce
//!   that pair with some `h'` and return `h = 1 + h'`.
//!
//! Existence is guaranteed but not constructive, so the inner step is a
//! bounded search whose every answer carries a certificate. Exhausting the
//! search proves nothing.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::blaschke::{build_blaschke, check_membership, BlaschkeSpec, MembershipReport};
use crate::error::{Error, Result};
use crate::numcore::{certify_nonvanishing, cx, Cx, NonvanishingCert, Poly, RationalFn, CERT_SAMPLES};
use crate::verify::{boundary_max, residual, GridConfig};

#[derive(Debug, Clone)]
pub struct UnimodularPair {
    pub f: RationalFn,
    pub g: RationalFn,
    pub spec: BlaschkeSpec,
    /// `(x, y)` with `f x + g y = 1`.
    pub witness: Option<(RationalFn, RationalFn)>,
}

impl UnimodularPair {
    pub fn new(
        f: RationalFn,
        g: RationalFn,
        spec: BlaschkeSpec,
        witness: Option<(RationalFn, RationalFn)>,
        tol: f64,
        grid: &GridConfig,
    ) -> Result<Self> {
        for (name, func) in [("f", &f), ("g", &g)] {
            let r = check_membership(func, &spec, tol);
            if !r.passed {
                return Err(Error::NotAMember(format!("{name}: defect {:.3e}", r.max_defect())));
            }
        }
        let pair = UnimodularPair { f, g, spec, witness };
        if let Some(res) = pair.witness_residual(grid)? {
            if res > tol {
                return Err(Error::Input(format!("witness residual {res:.3e} exceeds {tol:.1e}")));
            }
        }
        Ok(pair)
    }

    pub fn witness_residual(&self, grid: &GridConfig) -> Result<Option<f64>> {
        match &self.witness {
            None => Ok(None),
            Some((x, y)) => Ok(Some(residual(
                &[self.f.clone(), self.g.clone()],
                &[x.clone(), y.clone()],
                grid,
            )?)),
        }
    }

    /// `(f + g, g)` with witness `(x, y - x)`.
    pub fn case_two_transform(&self) -> Result<UnimodularPair> {
        let witness = match &self.witness {
            Some((x, y)) => Some((x.clone(), y.sub(x)?)),
            None => None,
        };
        Ok(UnimodularPair {
            f: self.f.add(&self.g)?,
            g: self.g.clone(),
            spec: self.spec.clone(),
            witness,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchBudget {
    /// Largest degree of `q` in candidates `c + B q`.
    pub max_degree: usize,
    /// Constant grid: `magnitudes` radii up to `max_constant` times `phases` angles.
    pub magnitudes: usize,
    pub phases: usize,
    pub max_constant: f64,
    /// Low-discrepancy samples per polynomial degree.
    pub samples_per_degree: usize,
    /// Compass-search sweeps polishing the best sample.
    pub polish_iters: usize,
    pub tol: f64,
    pub grid: GridConfig,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_degree: 8,
            magnitudes: 16,
            phases: 64,
            max_constant: 2.0,
            samples_per_degree: 256,
            polish_iters: 60,
            tol: 1e-8,
            grid: GridConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionCase {
    /// `f(a_1) != 0`: searched on `(f, g)` directly.
    Direct,
    /// `f(a_1) = 0`: searched on `(f + g, g)`, answer shifted by one.
    Shifted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SearchStage {
    Zero,
    Constant,
    Polynomial { degree: usize },
    Supplied,
}

/// `h` together with the evidence that `f + h g` is invertible.
#[derive(Debug, Clone)]
pub struct ReductionCert {
    pub h: RationalFn,
    /// `min_{|z| <= 1} |f + h g|`, attained on the circle.
    pub inverse_margin: f64,
    pub h_membership: MembershipReport,
    pub sum_membership: MembershipReport,
    /// Certificate for the numerator of `f + h g`.
    pub sum_cert: NonvanishingCert,
    pub case: Option<ReductionCase>,
    pub stage: SearchStage,
}

/// Checks a proposed `h`: membership of `h`, then that `f + h g` has a
/// numerator zero-free on the closed disk.
pub fn verify_reduction(pair: &UnimodularPair, h: &RationalFn, tol: f64, grid: &GridConfig) -> Result<ReductionCert> {
    let h_membership = check_membership(h, &pair.spec, tol);
    if !h_membership.passed {
        return Err(Error::Rejection(format!(
            "h is not in the algebra (value defect {:.3e}, jet defect {:.3e})",
            h_membership.a1_defect, h_membership.jet_defect
        )));
    }
    let sum = pair.f.add(&h.mul(&pair.g)?)?;
    let sum_cert = certify_nonvanishing(sum.num(), CERT_SAMPLES)
        .map_err(|e| Error::Rejection(format!("f + h g is not invertible: {e}")))?;
    let sum_membership = check_membership(&sum, &pair.spec, tol);
    if !sum_membership.passed {
        return Err(Error::Rejection(format!(
            "f + h g left the algebra (defect {:.3e})",
            sum_membership.max_defect()
        )));
    }
    // zero-free on the closed disk: min |f + h g| is attained on the circle
    let inverse_margin = -boundary_max(|z| -sum.value(z).norm(), grid).value;
    Ok(ReductionCert {
        h: h.clone(),
        inverse_margin,
        h_membership,
        sum_membership,
        sum_cert,
        case: None,
        stage: SearchStage::Supplied,
    })
}

/// Boundary samples used to score candidates; the final answer is always
/// re-checked by [`verify_reduction`].
const SCORE_SAMPLES: usize = 256;

/// Pointwise data on the scoring circle.
struct Circle {
    points: Vec<Cx>,
    f: Vec<Cx>,
    g: Vec<Cx>,
    b: Vec<Cx>,
}

impl Circle {
    fn new(pair: &UnimodularPair, b: &RationalFn) -> Self {
        let points: Vec<Cx> = (0..SCORE_SAMPLES)
            .map(|k| Cx::from_polar(1.0, 2.0 * PI * k as f64 / SCORE_SAMPLES as f64))
            .collect();
        Circle {
            f: points.iter().map(|&z| pair.f.value(z)).collect(),
            g: points.iter().map(|&z| pair.g.value(z)).collect(),
            b: points.iter().map(|&z| b.value(z)).collect(),
            points,
        }
    }

    /// Sampled `min |f + h g|` for `h = c + B q`, or a negative score when
    /// the sampled winding number is nonzero (zeros inside).
    fn score(&self, c: Cx, q: &[Cx]) -> f64 {
        let q = Poly::new(q.to_vec());
        let mut min = f64::INFINITY;
        let mut total = 0.0;
        let mut prev: Option<Cx> = None;
        let mut first = Cx::new(0.0, 0.0);
        for k in 0..self.points.len() {
            let h = c + self.b[k] * q.eval(self.points[k]);
            let s = self.f[k] + h * self.g[k];
            min = min.min(s.norm());
            match prev {
                Some(p) => total += (s / p).arg(),
                None => first = s,
            }
            prev = Some(s);
        }
        if let Some(p) = prev {
            total += (first / p).arg();
        }
        if min == 0.0 {
            return -1.0;
        }
        let winding = (total / (2.0 * PI)).round();
        if winding != 0.0 {
            return -winding.abs();
        }
        min
    }
}

/// Index of the best score; ties within `1e-12` go to the earliest index.
fn best_index(scores: &[f64]) -> Option<usize> {
    let max = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return None;
    }
    scores.iter().position(|&s| s >= max - 1e-12)
}

fn radical_inverse(mut index: u64, base: u64) -> f64 {
    let mut result = 0.0;
    let mut f = 1.0 / base as f64;
    while index > 0 {
        result += f * (index % base) as f64;
        index /= base;
        f /= base as f64;
    }
    result
}

const PRIMES: [u64; 24] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
];

/// Halton point `index` mapped to complex coefficients in `[-r, r]^2`.
fn halton_coeffs(index: u64, count: usize, r: f64) -> Vec<Cx> {
    (0..count)
        .map(|j| {
            let re = radical_inverse(index, PRIMES[(2 * j) % PRIMES.len()]);
            let im = radical_inverse(index, PRIMES[(2 * j + 1) % PRIMES.len()]);
            cx(r * (2.0 * re - 1.0), r * (2.0 * im - 1.0))
        })
        .collect()
}

/// Certificate for `f + h g` invertible, or `SearchExhausted`.
pub fn reduce_pair(pair: &UnimodularPair, budget: &SearchBudget) -> Result<ReductionCert> {
    let a = pair.f.value(pair.spec.base_point());
    let (case, work, shift) = if a.norm() < budget.tol {
        (ReductionCase::Shifted, pair.case_two_transform()?, cx(1.0, 0.0))
    } else {
        (ReductionCase::Direct, pair.clone(), cx(0.0, 0.0))
    };
    let b = build_blaschke(&pair.spec);
    // candidates h' = c + B q act on the working pair; the answer for the
    // original pair is h = shift + h'
    let circle = Circle::new(&work, &b);
    let finish = |c: Cx, q: &[Cx], stage: SearchStage| -> Option<ReductionCert> {
        let q = Poly::new(q.to_vec());
        let h = if q.is_zero() {
            RationalFn::constant(c + shift)
        } else {
            b.mul_poly(&q).add_const(c + shift)
        };
        let mut cert = verify_reduction(pair, &h, budget.tol, &budget.grid).ok()?;
        cert.case = Some(case);
        cert.stage = stage;
        Some(cert)
    };

    let zero = cx(0.0, 0.0);
    if let Some(cert) = finish(zero, &[], SearchStage::Zero) {
        return Ok(cert);
    }
    let mut best_margin = circle.score(zero, &[]);

    // constant part of the final h on a polar grid, magnitude-major order
    let constants: Vec<Cx> = (1..=budget.magnitudes)
        .flat_map(|m| {
            let r = budget.max_constant * m as f64 / budget.magnitudes as f64;
            (0..budget.phases)
                .map(move |p| Cx::from_polar(r, 2.0 * PI * p as f64 / budget.phases as f64))
        })
        .collect();
    let scores: Vec<f64> =
        constants.par_iter().map(|&c| circle.score(c - shift, &[])).collect();
    let mut base = zero;
    if let Some(i) = best_index(&scores) {
        best_margin = best_margin.max(scores[i]);
        if scores[i] > 0.0 {
            base = constants[i] - shift;
            if let Some(cert) = finish(base, &[], SearchStage::Constant) {
                return Ok(cert);
            }
        }
    }

    // c + B q with deg q = 0, 1, ..., max_degree
    for degree in 0..=budget.max_degree {
        let count = degree + 1;
        let candidates: Vec<Vec<Cx>> = (1..=budget.samples_per_degree as u64)
            .map(|i| halton_coeffs(i, count, budget.max_constant))
            .collect();
        let scores: Vec<f64> = candidates.par_iter().map(|q| circle.score(base, q)).collect();
        let Some(i) = best_index(&scores) else { continue };
        let mut q = candidates[i].clone();
        let mut score = scores[i];
        let mut step = budget.max_constant / 8.0;
        for _ in 0..budget.polish_iters {
            let mut improved = false;
            for j in 0..count {
                for dir in [cx(1.0, 0.0), cx(0.0, 1.0), cx(-1.0, 0.0), cx(0.0, -1.0)] {
                    let mut trial = q.clone();
                    trial[j] += dir * step;
                    let s = circle.score(base, &trial);
                    if s > score + 1e-14 {
                        q = trial;
                        score = s;
                        improved = true;
                    }
                }
            }
            if !improved {
                step /= 2.0;
            }
        }
        best_margin = best_margin.max(score);
        if score > 0.0 {
            if let Some(cert) = finish(base, &q, SearchStage::Polynomial { degree }) {
                return Ok(cert);
            }
        }
    }
    Err(Error::SearchExhausted { best_margin })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[f64]) -> RationalFn {
        RationalFn::from_poly(Poly::real(c))
    }

    fn pair(f: &[f64], g: &[f64]) -> UnimodularPair {
        let spec = BlaschkeSpec::single(cx(0.0, 0.0), 2).unwrap();
        UnimodularPair::new(poly(f), poly(g), spec, None, 1e-10, &GridConfig::default()).unwrap()
    }

    #[test]
    fn already_invertible() {
        let cert = reduce_pair(&pair(&[1.0, 0.0, -0.5], &[0.0, 0.0, 1.0]), &SearchBudget::default()).unwrap();
        assert!(cert.h.is_zero());
        assert_eq!(cert.stage, SearchStage::Zero);
        assert!((cert.inverse_margin - 0.5).abs() < 1e-6);
    }

    #[test]
    fn constant_two_for_z_squared() {
        let cert = reduce_pair(&pair(&[0.0, 0.0, 1.0], &[1.0]), &SearchBudget::default()).unwrap();
        assert_eq!(cert.case, Some(ReductionCase::Shifted));
        assert!((cert.h.value(cx(0.0, 0.0)) - cx(2.0, 0.0)).norm() < 1e-12);
        assert!((cert.inverse_margin - 1.0).abs() < 1e-6);
    }

    #[test]
    fn shifted_case_transform() {
        let p = pair(&[0.0, 0.0, 1.0], &[1.0, 0.0, 1.0]);
        let t = p.case_two_transform().unwrap();
        assert!(t.f.num().max_coeff_diff(&Poly::real(&[1.0, 0.0, 2.0])) < 1e-15);
        let cert = reduce_pair(&p, &SearchBudget::default()).unwrap();
        assert_eq!(cert.case, Some(ReductionCase::Shifted));
        let again = verify_reduction(&p, &cert.h, 1e-8, &GridConfig::default()).unwrap();
        assert!((again.inverse_margin - cert.inverse_margin).abs() < 1e-12);
    }

    #[test]
    fn verify_examples() {
        let g = GridConfig::default();
        let c = verify_reduction(&pair(&[1.0, 0.0, -0.5], &[0.0, 0.0, 1.0]), &RationalFn::zero(), 1e-8, &g).unwrap();
        assert!((c.inverse_margin - 0.5).abs() < 1e-6);
        let p = pair(&[0.0, 0.0, 1.0], &[1.0]);
        let e = verify_reduction(&p, &RationalFn::zero(), 1e-8, &g).unwrap_err();
        assert!(matches!(e, Error::Rejection(ref s) if s.contains("winding number 2")));
        let e = verify_reduction(&p, &poly(&[0.0, 1.0]), 1e-8, &g).unwrap_err();
        assert!(matches!(e, Error::Rejection(ref s) if s.contains("not in the algebra")));
        let c = verify_reduction(&p, &poly(&[2.0]), 1e-8, &g).unwrap();
        assert!((c.inverse_margin - 1.0).abs() < 1e-6);
    }

    #[test]
    fn witness_transform_preserves_residual() {
        let spec = BlaschkeSpec::single(cx(0.0, 0.0), 2).unwrap();
        // z^2 * z^4 + (1 - z^3)(1 + z^3) = 1
        let p = UnimodularPair::new(
            poly(&[0.0, 0.0, 1.0]),
            poly(&[1.0, 0.0, 0.0, -1.0]),
            spec,
            Some((poly(&[0.0, 0.0, 0.0, 0.0, 1.0]), poly(&[1.0, 0.0, 0.0, 1.0]))),
            1e-10,
            &GridConfig::default(),
        )
        .unwrap();
        let t = p.case_two_transform().unwrap();
        let g = GridConfig::default();
        assert!(t.witness_residual(&g).unwrap().unwrap() <= 1e-12);
    }

    #[test]
    fn bad_witness_rejected() {
        let spec = BlaschkeSpec::single(cx(0.0, 0.0), 2).unwrap();
        let r = UnimodularPair::new(
            poly(&[0.0, 0.0, 1.0]),
            poly(&[1.0]),
            spec,
            Some((poly(&[1.0]), poly(&[1.0]))),
            1e-10,
            &GridConfig::default(),
        );
        assert!(matches!(r, Err(Error::Input(_))));
    }
}

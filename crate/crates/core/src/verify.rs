//! Grid measurements on the closed disk: sup norms, the corona constant
//! `delta = inf sum |f_k|`, and Bezout residuals.
//!
//! Sup norms and residuals of holomorphic functions are taken on the
//! boundary circle (maximum modulus principle). `sum |f_k|` needs the
//! interior too, since its infimum can sit anywhere.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numcore::{Cx, RationalFn};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridConfig {
    pub boundary_samples: usize,
    pub radial_rings: usize,
    pub refinement_rounds: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig { boundary_samples: 512, radial_rings: 64, refinement_rounds: 2 }
    }
}

impl GridConfig {
    pub fn new(boundary_samples: usize, radial_rings: usize, refinement_rounds: usize) -> Result<Self> {
        let cfg = GridConfig { boundary_samples, radial_rings, refinement_rounds };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.boundary_samples < 64 || !self.boundary_samples.is_power_of_two() {
            return Err(Error::Input(format!(
                "boundary_samples must be a power of two >= 64, got {}",
                self.boundary_samples
            )));
        }
        if self.radial_rings == 0 {
            return Err(Error::Input("radial_rings must be positive".into()));
        }
        Ok(())
    }

    /// Number of points in the interior-plus-boundary grid.
    pub fn disk_points(&self) -> usize {
        1 + (1..=self.radial_rings).map(|j| self.ring_count(j)).sum::<usize>()
    }

    fn ring_count(&self, j: usize) -> usize {
        let r = j as f64 / self.radial_rings as f64;
        ((self.boundary_samples as f64 * r).round() as usize).max(8)
    }
}

/// A grid value together with an estimate of how far the true extremum
/// can be from it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Measurement {
    pub value: f64,
    pub grid_error: f64,
    pub argument: Cx,
}

fn on_circle(theta: f64) -> Cx {
    Cx::from_polar(1.0, theta)
}

/// Maximum of `phi` on the unit circle with local refinement around the
/// argmax. The error estimate is the largest sampled slope times half the
/// coarse spacing.
pub fn boundary_max<F>(phi: F, cfg: &GridConfig) -> Measurement
where
    F: Fn(Cx) -> f64 + Sync,
{
    let n = cfg.boundary_samples;
    let h = 2.0 * PI / n as f64;
    let vals: Vec<f64> = (0..n).into_par_iter().map(|k| phi(on_circle(h * k as f64))).collect();
    let mut best = 0;
    for k in 1..n {
        if vals[k] > vals[best] {
            best = k;
        }
    }
    let slope = (0..n)
        .map(|k| (vals[(k + 1) % n] - vals[k]).abs() / h)
        .fold(0.0, f64::max);
    let mut theta = h * best as f64;
    let mut value = vals[best];
    if cfg.refinement_rounds > 0 {
        let (t, v) = golden_max(&phi, theta - h, theta + h, 24 * cfg.refinement_rounds);
        if v > value {
            theta = t;
            value = v;
        }
    }
    Measurement { value, grid_error: slope * h / 2.0, argument: on_circle(theta) }
}

/// Golden-section search for a maximum of `phi(e^{it})` on `[lo, hi]`.
fn golden_max<F>(phi: &F, mut lo: f64, mut hi: f64, iters: usize) -> (f64, f64)
where
    F: Fn(Cx) -> f64,
{
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut a = hi - ratio * (hi - lo);
    let mut b = lo + ratio * (hi - lo);
    let mut fa = phi(on_circle(a));
    let mut fb = phi(on_circle(b));
    for _ in 0..iters {
        if fa >= fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - ratio * (hi - lo);
            fa = phi(on_circle(a));
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + ratio * (hi - lo);
            fb = phi(on_circle(b));
        }
    }
    if fa >= fb {
        (a, fa)
    } else {
        (b, fb)
    }
}

/// `sup_{|z| <= 1} |f(z)|`.
pub fn sup_norm(f: &RationalFn, cfg: &GridConfig) -> f64 {
    sup_norm_estimate(f, cfg).value
}

pub fn sup_norm_estimate(f: &RationalFn, cfg: &GridConfig) -> Measurement {
    boundary_max(|z| f.value(z).norm(), cfg)
}

/// `sup_{|z| <= 1} sum |f_k(z)|`; the sum is subharmonic, so the circle
/// suffices.
pub fn sup_sum(fs: &[RationalFn], cfg: &GridConfig) -> f64 {
    boundary_max(|z| fs.iter().map(|f| f.value(z).norm()).sum(), cfg).value
}

/// `sup_{|z| = 1} |sum g_k f_k - 1|`, a bound on the whole disk since the
/// defect is holomorphic on the closed disk.
pub fn residual(fs: &[RationalFn], gs: &[RationalFn], cfg: &GridConfig) -> Result<f64> {
    if fs.len() != gs.len() {
        return Err(Error::DimensionMismatch { expected: fs.len(), got: gs.len() });
    }
    Ok(boundary_max(
        |z| {
            let s: Cx = fs.iter().zip(gs).map(|(f, g)| f.value(z) * g.value(z)).sum();
            (s - 1.0).norm()
        },
        cfg,
    )
    .value)
}

/// `min sum_k |f_k(z)|` over the closed disk.
pub fn corona_delta(fs: &[RationalFn], cfg: &GridConfig) -> f64 {
    corona_delta_estimate(fs, cfg).value
}

/// Grid minimum of `sum |f_k|` over concentric rings (point counts
/// proportional to the radius) plus the centre, followed by
/// `refinement_rounds` local re-grids of radius twice the local spacing
/// around the running argmin.
pub fn corona_delta_estimate(fs: &[RationalFn], cfg: &GridConfig) -> Measurement {
    let sum_abs = |z: Cx| -> f64 { fs.iter().map(|f| f.value(z).norm()).sum() };
    let rings = cfg.radial_rings;
    let per_ring: Vec<(f64, Cx, f64)> = (1..=rings)
        .into_par_iter()
        .map(|j| {
            let r = j as f64 / rings as f64;
            let count = if j == rings { cfg.boundary_samples } else { cfg.ring_count(j) };
            let mut best = (f64::INFINITY, Cx::new(0.0, 0.0));
            for k in 0..count {
                let z = Cx::from_polar(r, 2.0 * PI * k as f64 / count as f64);
                let v = sum_abs(z);
                if v < best.0 {
                    best = (v, z);
                }
            }
            let spacing = (2.0 * PI * r / count as f64).max(1.0 / rings as f64);
            (best.0, best.1, spacing)
        })
        .collect();
    let centre = Cx::new(0.0, 0.0);
    let mut best = (sum_abs(centre), centre, 1.0 / rings as f64);
    for &(v, z, s) in &per_ring {
        if v < best.0 {
            best = (v, z, s);
        }
    }
    let (mut value, mut arg, spacing) = best;
    let mut radius = 2.0 * spacing;
    const SIDE: usize = 17;
    for _ in 0..cfg.refinement_rounds {
        let step = 2.0 * radius / (SIDE - 1) as f64;
        let centre = arg;
        for i in 0..SIDE {
            for j in 0..SIDE {
                let z = centre
                    + Cx::new(-radius + step * i as f64, -radius + step * j as f64);
                if z.norm() > 1.0 {
                    continue;
                }
                let v = sum_abs(z);
                if v < value {
                    value = v;
                    arg = z;
                }
            }
        }
        radius = 2.0 * step;
    }
    // compass search: handles the cone-shaped minima at common zeros
    if cfg.refinement_rounds > 0 {
        let mut step = radius / 2.0;
        let dirs = [Cx::new(1.0, 0.0), Cx::new(0.0, 1.0), Cx::new(-1.0, 0.0), Cx::new(0.0, -1.0)];
        for _ in 0..200 {
            let mut moved = false;
            for d in dirs {
                let z = arg + d * step;
                if z.norm() > 1.0 {
                    continue;
                }
                let v = sum_abs(z);
                if v < value {
                    value = v;
                    arg = z;
                    moved = true;
                    break;
                }
            }
            if !moved {
                step /= 2.0;
                if step < 1e-15 {
                    break;
                }
            }
        }
    }
    // |grad sum |f_k|| <= sum |f_k'|, which is subharmonic: boundary max bounds it
    let slope = boundary_max(
        |z| {
            fs.iter()
                .map(|f| {
                    let d = f.taylor_at(z, 1);
                    d[1].norm()
                })
                .sum()
        },
        cfg,
    )
    .value;
    Measurement { value, grid_error: slope * spacing / 2.0, argument: arg }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::{cx, Poly};

    fn poly(c: &[f64]) -> RationalFn {
        RationalFn::from_poly(Poly::real(c))
    }

    #[test]
    fn config_validation() {
        assert!(GridConfig::new(100, 8, 1).is_err());
        assert!(GridConfig::new(32, 8, 1).is_err());
        assert!(GridConfig::new(64, 0, 1).is_err());
        assert!(GridConfig::new(64, 4, 0).is_ok());
    }

    #[test]
    fn sup_norm_examples() {
        let cfg = GridConfig::default();
        assert!((sup_norm(&poly(&[0.0, 0.0, 1.0]), &cfg) - 1.0).abs() < 1e-12);
        let f = RationalFn::new(Poly::one(), Poly::real(&[1.0, -0.5])).unwrap();
        assert!((sup_norm(&f, &cfg) - 2.0).abs() < 1e-12);
        let c = RationalFn::constant(cx(3.0, -4.0));
        assert!((sup_norm(&c, &cfg) - 5.0).abs() < 1e-12);
    }

    #[test]
    fn sup_norm_refines_off_grid_peaks() {
        // peak at angle 0.1 (not a grid angle): f = 1/(1 - 0.9 e^{-0.1 i} z)
        let a = Cx::from_polar(0.9, -0.1);
        let f = RationalFn::new(Poly::one(), Poly::new(vec![cx(1.0, 0.0), -a])).unwrap();
        let m = sup_norm_estimate(&f, &GridConfig::default());
        assert!((m.value - 10.0).abs() < 1e-6, "{}", m.value);
    }

    #[test]
    fn corona_delta_examples() {
        let cfg = GridConfig::default();
        let d = corona_delta(&[poly(&[0.0, 1.0]), poly(&[1.0, -1.0])], &cfg);
        assert!(d >= 1.0 - 1e-12 && d <= 1.0 + 1e-3, "{d}");
        let d = corona_delta(&[poly(&[0.0, 0.0, 1.0]), poly(&[0.0, 0.0, 0.0, 1.0])], &cfg);
        assert!(d <= 1e-12);
        assert_eq!(corona_delta(&[poly(&[1.0])], &cfg), 1.0);
    }

    #[test]
    fn planted_zero_off_grid() {
        let a = cx(0.377, -0.512);
        let f1 = RationalFn::from_poly(Poly::linear_root(a));
        let f2 = RationalFn::from_poly(Poly::linear_root(a).mul_linear(cx(0.2, 0.9)));
        let d = corona_delta(&[f1, f2], &GridConfig::default());
        assert!(d <= 1e-3, "{d}");
    }

    #[test]
    fn residual_examples() {
        let cfg = GridConfig::default();
        let fs = [poly(&[0.0, 0.0, 1.0]), poly(&[1.0, 0.0, 0.0, -1.0])];
        let gs = [poly(&[0.0, 0.0, 0.0, 0.0, 1.0]), poly(&[1.0, 0.0, 0.0, 1.0])];
        assert!(residual(&fs, &gs, &cfg).unwrap() <= 1e-12);
        let zeros = [RationalFn::zero(), RationalFn::zero()];
        assert_eq!(residual(&fs, &zeros, &cfg).unwrap(), 1.0);
        assert_eq!(residual(&[poly(&[1.0])], &[poly(&[1.0])], &cfg).unwrap(), 0.0);
        assert!(matches!(
            residual(&fs, &zeros[..1], &cfg),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}

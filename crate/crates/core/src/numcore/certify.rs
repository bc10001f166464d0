use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::poly::{Cx, Poly};
use crate::error::{Error, Result};

/// Refinement stops once the boundary grid reaches this many samples.
const MAX_SAMPLES: usize = 1 << 18;

/// Proof that a polynomial has no zeros on the closed unit disk.
///
/// `margin` is the smallest sampled modulus on the circle. Write
/// `D_k = sum (i j)^k c_j z^j` for the angular derivatives of
/// `p(e^{i theta})`. On the arc of half-width `h = pi / samples` around a
/// sample `z`, Taylor's theorem in the angle gives
/// `|p| >= |p(z)| - sum_{k=1}^{3} |D_k(z)| h^k / k! - remainder_bound h^4 / 24`
/// with `remainder_bound = sum j^4 |c_j|`; `lower` is the least of these
/// over all samples. `lower > 0` rules out boundary zeros and keeps every
/// argument increment between neighbours below `pi`, so the summed
/// increments give the winding number, which must be zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NonvanishingCert {
    pub margin: f64,
    pub samples: usize,
    pub lower: f64,
    pub remainder_bound: f64,
}

impl NonvanishingCert {
    /// Certificate for a nonzero constant.
    pub fn constant(c: Cx) -> Self {
        NonvanishingCert { margin: c.norm(), samples: 64, lower: c.norm(), remainder_bound: 0.0 }
    }

    /// Gap between the sampled minimum and the certified bound.
    pub fn slack(&self) -> f64 {
        self.margin - self.lower
    }

    /// Certified lower bound for the modulus on the circle.
    pub fn lower_bound(&self) -> f64 {
        self.lower
    }
}

/// Certifies that `p` is zero-free on the closed unit disk.
///
/// Boundary samples double until the per-arc Taylor bound is positive
/// everywhere; the argument increments then sum to `2 pi` times the number
/// of interior zeros.
pub fn certify_nonvanishing(p: &Poly, samples: usize) -> Result<NonvanishingCert> {
    if samples < 64 {
        return Err(Error::Input(format!("certification needs at least 64 samples, got {samples}")));
    }
    if !p.is_finite() {
        return Err(Error::NonFinite("polynomial coefficients"));
    }
    if p.is_zero() {
        return Err(Error::Certification("zero polynomial".into()));
    }
    if p.is_constant() {
        return Ok(NonvanishingCert::constant(p.coeff(0)));
    }
    let angular = |k: i32| {
        Poly::new(p.coeffs().iter().enumerate().map(|(j, c)| c * Cx::new(0.0, j as f64).powi(k)).collect())
    };
    let d = [angular(1), angular(2), angular(3)];
    let remainder: f64 = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| (j as f64).powi(4) * c.norm())
        .sum();
    let scale = p.l1_norm();
    let mut n = samples;
    loop {
        let h = PI / n as f64;
        let (vals, lows): (Vec<Cx>, Vec<f64>) = (0..n)
            .map(|k| {
                let z = Cx::from_polar(1.0, 2.0 * PI * k as f64 / n as f64);
                let v = p.eval(z);
                let drift = d[0].eval(z).norm() * h
                    + d[1].eval(z).norm() * h * h / 2.0
                    + d[2].eval(z).norm() * h * h * h / 6.0;
                (v, v.norm() - drift)
            })
            .unzip();
        let margin = vals.iter().map(|v| v.norm()).fold(f64::INFINITY, f64::min);
        if margin <= 1e-13 * scale {
            return Err(Error::Certification(format!(
                "boundary modulus {margin:.3e} at sample resolution {n}: zero on the circle"
            )));
        }
        let lower = lows.iter().copied().fold(f64::INFINITY, f64::min) - remainder * h.powi(4) / 24.0;
        if lower > 0.0 {
            let total: f64 = (0..n).map(|k| (vals[(k + 1) % n] / vals[k]).arg()).sum();
            let winding = (total / (2.0 * PI)).round() as i64;
            if winding != 0 {
                return Err(Error::Certification(format!(
                    "winding number {winding}: zeros inside the disk"
                )));
            }
            return Ok(NonvanishingCert { margin, samples: n, lower, remainder_bound: remainder });
        }
        if n >= MAX_SAMPLES {
            return Err(Error::Certification(format!(
                "boundary margin {margin:.3e} not certified at {n} samples (bound {lower:.3e})"
            )));
        }
        n *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_shift_has_margin_one_half() {
        let cert = certify_nonvanishing(&Poly::real(&[1.0, -0.5]), 64).unwrap();
        assert!((cert.margin - 0.5).abs() < 1e-12);
        assert!(cert.lower_bound() > 0.0);
        assert!(cert.margin > cert.slack());
        assert!(cert.lower_bound() <= cert.margin);
    }

    #[test]
    fn zero_inside_is_rejected() {
        let err = certify_nonvanishing(&Poly::real(&[0.0, 1.0]), 64).unwrap_err();
        assert!(matches!(err, Error::Certification(ref s) if s.contains("winding number 1")));
    }

    #[test]
    fn boundary_zeros_are_rejected() {
        assert!(certify_nonvanishing(&Poly::real(&[1.0, 0.0, 1.0]), 64).is_err());
    }

    #[test]
    fn small_sample_count_is_an_input_error() {
        assert!(matches!(
            certify_nonvanishing(&Poly::one(), 8),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn high_multiplicity_zero_near_the_circle() {
        // (1 - 0.9 z)^9: margin 0.1^9 with large coefficients
        let p = Poly::real(&[1.0, -0.9]).pow(9);
        let cert = certify_nonvanishing(&p, 64).unwrap();
        assert!((cert.margin - 1e-9).abs() < 1e-12);
        assert!(cert.lower_bound() > 0.0);
        let inside = Poly::real(&[0.9, -1.0]).pow(9);
        assert!(certify_nonvanishing(&inside, 64).is_err());
    }

    #[test]
    fn refines_for_thin_margins() {
        // root at 1.001: margin 1e-3 needs many samples
        let p = Poly::real(&[1.001, -1.0]);
        let cert = certify_nonvanishing(&p, 64).unwrap();
        assert!(cert.samples > 64);
        assert!(cert.lower_bound() > 0.0);
    }
}

use super::poly::{Cx, Poly};
use crate::error::{Error, Result};

/// Relative threshold of the degree decision rule.
pub const EUCLID_EPS: f64 = 1e-10;

/// Output of [`poly_ext_gcd`]: `sum cofactors[j] * ps[j] = gcd`.
#[derive(Debug, Clone)]
pub struct GcdResult {
    pub gcd: Poly,
    pub cofactors: Vec<Poly>,
}

/// Drops leading coefficients that are negligible relative to `scale`.
///
/// Below `eps/10` a coefficient is noise, above `10 eps` it is signal; in
/// between the degree cannot be decided and the step is refused.
fn decide_degree(p: Poly, scale: f64, eps: f64) -> Result<Poly> {
    let mut coeffs = p.into_coeffs();
    while let Some(top) = coeffs.last() {
        let rel = top.norm() / scale;
        if rel < eps / 10.0 {
            coeffs.pop();
        } else if rel <= 10.0 * eps {
            return Err(Error::IllConditioned(rel));
        } else {
            break;
        }
    }
    Ok(Poly::new(coeffs))
}

/// Two-polynomial extended Euclid: returns `(d, s, t)` with `s a + t b = d`,
/// `d` monic.
fn ext_gcd2(a: &Poly, b: &Poly, scale: f64, eps: f64) -> Result<(Poly, Poly, Poly)> {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(), Poly::zero());
    let (mut t0, mut t1) = (Poly::zero(), Poly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1)?;
        let r = decide_degree(r, scale, eps)?;
        let s = &s0 - &q * &s1;
        let t = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.is_zero() {
        return Err(Error::Input("gcd of zero polynomials".into()));
    }
    let inv = r0.leading().inv();
    Ok((r0.monic(), s0.scale(inv), t0.scale(inv)))
}

/// Greatest common divisor of a list of polynomials together with Bezout
/// cofactors, by iterated two-polynomial extended Euclid.
///
/// Cofactors are reduced afterwards: each `u_j` (`j > 0`) is taken modulo
/// `ps[0]/d` with the quotient moved into `u_0`, which keeps degrees small
/// and reproduces the textbook cofactors on small inputs.
pub fn poly_ext_gcd(ps: &[Poly]) -> Result<GcdResult> {
    poly_ext_gcd_eps(ps, EUCLID_EPS)
}

pub fn poly_ext_gcd_eps(ps: &[Poly], eps: f64) -> Result<GcdResult> {
    if ps.is_empty() || ps.iter().all(Poly::is_zero) {
        return Err(Error::Input("gcd needs at least one nonzero polynomial".into()));
    }
    let scale = ps.iter().map(Poly::max_abs).fold(0.0, f64::max);
    let mut d = ps[0].clone();
    let mut us: Vec<Poly> = vec![Poly::zero(); ps.len()];
    if !ps[0].is_zero() {
        us[0] = Poly::one();
    }
    for j in 1..ps.len() {
        if ps[j].is_zero() {
            continue;
        }
        if d.is_zero() {
            // everything so far was zero
            d = ps[j].monic();
            us[j] = Poly::constant(ps[j].leading().inv());
            continue;
        }
        let (g, s, t) = ext_gcd2(&d, &ps[j], scale, eps)?;
        for u in us.iter_mut().take(j) {
            *u = &*u * &s;
        }
        us[j] = t;
        d = g;
    }
    let inv = d.leading().inv();
    if inv != Cx::new(1.0, 0.0) {
        d = d.monic();
        us = us.iter().map(|u| u.scale(inv)).collect();
    }
    if ps.len() == 1 || ps[0].is_zero() {
        return Ok(GcdResult { gcd: d, cofactors: us });
    }
    let (cof0, _) = ps[0].div_rem(&d)?;
    for j in 1..ps.len() {
        let (q, r) = us[j].div_rem(&cof0)?;
        if q.is_zero() {
            continue;
        }
        let (cofj, _) = ps[j].div_rem(&d)?;
        us[0] = &us[0] + &q * &cofj;
        us[j] = r;
    }
    Ok(GcdResult { gcd: d, cofactors: us })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::poly::cx;

    fn combo(ps: &[Poly], us: &[Poly]) -> Poly {
        ps.iter().zip(us).fold(Poly::zero(), |acc, (p, u)| acc + p * u)
    }

    #[test]
    fn linear_pair() {
        let ps = [Poly::real(&[0.0, 1.0]), Poly::real(&[1.0, -0.5])];
        let r = poly_ext_gcd(&ps).unwrap();
        assert_eq!(r.gcd, Poly::one());
        assert!(r.cofactors[0].max_coeff_diff(&Poly::real(&[0.5])) < 1e-15);
        assert!(r.cofactors[1].max_coeff_diff(&Poly::real(&[1.0])) < 1e-15);
    }

    #[test]
    fn worked_pair() {
        let ps = [Poly::real(&[0.0, 0.0, 1.0]), Poly::real(&[1.0, 0.0, 0.0, -1.0])];
        let r = poly_ext_gcd(&ps).unwrap();
        assert_eq!(r.gcd, Poly::one());
        assert!(r.cofactors[0].max_coeff_diff(&Poly::real(&[0.0, 1.0])) < 1e-15);
        assert!(r.cofactors[1].max_coeff_diff(&Poly::one()) < 1e-15);
    }

    #[test]
    fn common_factor() {
        let ps = [Poly::real(&[0.0, 0.0, 1.0]), Poly::real(&[0.0, 0.0, 0.0, 1.0])];
        let r = poly_ext_gcd(&ps).unwrap();
        assert_eq!(r.gcd, Poly::real(&[0.0, 0.0, 1.0]));
        assert!(r.cofactors[0].max_coeff_diff(&Poly::one()) < 1e-15);
        assert!(r.cofactors[1].is_zero());
    }

    #[test]
    fn handles_zero_entries() {
        let ps = [Poly::zero(), Poly::real(&[2.0, 2.0]), Poly::zero()];
        let r = poly_ext_gcd(&ps).unwrap();
        assert_eq!(r.gcd, Poly::real(&[1.0, 1.0]));
        assert!((combo(&ps, &r.cofactors) - &r.gcd).max_abs() < 1e-15);
        assert!(poly_ext_gcd(&[Poly::zero()]).is_err());
    }

    #[test]
    fn single_polynomial() {
        let r = poly_ext_gcd(&[Poly::real(&[3.0])]).unwrap();
        assert_eq!(r.gcd, Poly::one());
        assert!((r.cofactors[0].coeff(0) - cx(1.0 / 3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn ambiguity_band_is_an_error() {
        // z and z + 1e-10 * (max scale): remainder sits in the band
        let ps = [Poly::real(&[0.0, 1.0]), Poly::real(&[1e-10, 1.0])];
        assert!(matches!(poly_ext_gcd(&ps), Err(Error::IllConditioned(_))));
        // well below the band the remainder is noise: gcd is z
        let ps = [Poly::real(&[0.0, 1.0]), Poly::real(&[1e-14, 1.0])];
        assert_eq!(poly_ext_gcd(&ps).unwrap().gcd.degree(), 1);
    }

    #[test]
    fn three_polynomials() {
        let ps = [
            Poly::real(&[1.0, 2.0, 0.0, 1.0]),
            Poly::real(&[0.5, -1.0, 3.0]),
            Poly::real(&[-2.0, 0.0, 1.0, 0.0, 1.0]),
        ];
        let r = poly_ext_gcd(&ps).unwrap();
        assert_eq!(r.gcd, Poly::one());
        assert!((combo(&ps, &r.cofactors) - Poly::one()).max_abs() < 1e-9);
    }
}

use super::certify::{certify_nonvanishing, NonvanishingCert};
use super::euclid::poly_ext_gcd;
use super::poly::{cx, factorial, series_mul, series_reciprocal, Cx, Poly};
use crate::error::{Error, Result};

/// Boundary samples used when certifying a freshly built denominator.
pub const CERT_SAMPLES: usize = 128;

/// Points farther than this beyond the unit circle are rejected by `eval`.
pub const DOMAIN_TOL: f64 = 1e-9;

/// Quotient `num / den` with `den` monic and certified zero-free on the
/// closed unit disk, i.e. a function holomorphic on a neighbourhood of the
/// closed disk.
#[derive(Debug, Clone)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
    cert: NonvanishingCert,
}

impl RationalFn {
    /// Canonicalizes to a monic denominator and certifies it.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if !num.is_finite() || !den.is_finite() {
            return Err(Error::NonFinite("rational function coefficients"));
        }
        if den.is_zero() {
            return Err(Error::Certification("zero denominator".into()));
        }
        let lc = den.leading();
        let num = num.scale(lc.inv());
        let den = den.monic();
        let cert = certify_nonvanishing(&den, CERT_SAMPLES)?;
        Ok(RationalFn { num, den, cert })
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFn { num: p, den: Poly::one(), cert: NonvanishingCert::constant(cx(1.0, 0.0)) }
    }

    pub fn constant(c: Cx) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    /// Reuses an existing certificate for `den`; `den` must be the exact
    /// polynomial the certificate was issued for.
    fn with_cert(num: Poly, den: Poly, cert: NonvanishingCert) -> Self {
        RationalFn { num, den, cert }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn cert(&self) -> &NonvanishingCert {
        &self.cert
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at a point of the closed disk.
    pub fn eval(&self, z: Cx) -> Result<Cx> {
        if z.norm() > 1.0 + DOMAIN_TOL {
            return Err(Error::Domain(format!("{z}")));
        }
        Ok(self.value(z))
    }

    /// Unchecked evaluation for grids known to lie in the closed disk.
    pub(crate) fn value(&self, z: Cx) -> Cx {
        self.num.eval(z) / self.den.eval(z)
    }

    /// Taylor coefficients `f^{(j)}(a)/j!` for `j = 0..=order`.
    pub fn taylor_at(&self, a: Cx, order: usize) -> Vec<Cx> {
        let n = order + 1;
        let num = self.num.taylor_at(a, order);
        let den = self.den.taylor_at(a, order);
        // den(a) != 0 for |a| <= 1 by the certificate
        let inv = series_reciprocal(&den, n).expect("certified denominator vanishes");
        series_mul(&num, &inv, n)
    }

    /// Derivatives `f^{(j)}(a)` for `j = 0..=order`.
    pub fn derivatives_at(&self, a: Cx, order: usize) -> Vec<Cx> {
        self.taylor_at(a, order)
            .into_iter()
            .enumerate()
            .map(|(j, c)| c * factorial(j))
            .collect()
    }

    /// `order`-fold derivative as a rational function over `den^(order+1)`.
    pub fn derivative(&self, order: usize) -> Result<RationalFn> {
        if order == 0 {
            return Ok(self.clone());
        }
        if self.is_polynomial() {
            return Ok(Self::from_poly(self.num.nth_derivative(order)));
        }
        // d/dz [N / D^j] = (N' D - j N D') / D^{j+1}
        let dprime = self.den.derivative();
        let mut num = self.num.clone();
        for j in 1..=order {
            num = &num.derivative() * &self.den - num.scale(cx(j as f64, 0.0)) * &dprime;
        }
        RationalFn::new(num, self.den.pow(order + 1))
    }

    fn same_den(&self, other: &RationalFn) -> bool {
        self.den.degree() == other.den.degree()
            && self.den.max_coeff_diff(&other.den) <= 1e-14 * self.den.max_abs().max(1.0)
    }

    pub fn add(&self, other: &RationalFn) -> Result<RationalFn> {
        if self.same_den(other) {
            return Ok(Self::with_cert(&self.num + &other.num, self.den.clone(), self.cert));
        }
        if other.is_polynomial() {
            return Ok(Self::with_cert(
                &self.num + &(&other.num * &self.den),
                self.den.clone(),
                self.cert,
            ));
        }
        if self.is_polynomial() {
            return other.add(self);
        }
        RationalFn::new(
            &self.num * &other.den + &other.num * &self.den,
            &self.den * &other.den,
        )
    }

    pub fn neg(&self) -> RationalFn {
        Self::with_cert(-&self.num, self.den.clone(), self.cert)
    }

    pub fn sub(&self, other: &RationalFn) -> Result<RationalFn> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RationalFn) -> Result<RationalFn> {
        if other.is_polynomial() {
            return Ok(self.mul_poly(&other.num));
        }
        if self.is_polynomial() {
            return Ok(other.mul_poly(&self.num));
        }
        RationalFn::new(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn mul_poly(&self, p: &Poly) -> RationalFn {
        Self::with_cert(&self.num * p, self.den.clone(), self.cert)
    }

    pub fn scale(&self, c: Cx) -> RationalFn {
        Self::with_cert(self.num.scale(c), self.den.clone(), self.cert)
    }

    pub fn add_const(&self, c: Cx) -> RationalFn {
        Self::with_cert(&self.num + &self.den.scale(c), self.den.clone(), self.cert)
    }

    /// Cancels the common factor of numerator and denominator when that
    /// factor is itself certified zero-free on the closed disk; otherwise
    /// returns `self` unchanged.
    pub fn reduce_common_factors(&self) -> RationalFn {
        if self.is_polynomial() || self.num.is_zero() {
            return self.clone();
        }
        let Ok(g) = poly_ext_gcd(&[self.num.clone(), self.den.clone()]) else {
            return self.clone();
        };
        if g.gcd.is_constant() || certify_nonvanishing(&g.gcd, CERT_SAMPLES).is_err() {
            return self.clone();
        }
        let (Ok((num, _)), Ok((den, _))) = (self.num.div_rem(&g.gcd), self.den.div_rem(&g.gcd))
        else {
            return self.clone();
        };
        RationalFn::new(num, den).unwrap_or_else(|_| self.clone())
    }
}

impl From<Poly> for RationalFn {
    fn from(p: Poly) -> Self {
        RationalFn::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(num: &[f64], den: &[f64]) -> RationalFn {
        RationalFn::new(Poly::real(num), Poly::real(den)).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(r(&[1.0, 1.0], &[1.0]).eval(cx(0.0, 0.0)).unwrap(), cx(1.0, 0.0));
        let v = r(&[0.0, 0.0, 1.0], &[1.0]).eval(cx(0.0, 1.0)).unwrap();
        assert!((v - cx(-1.0, 0.0)).norm() < 1e-15);
        let v = r(&[1.0], &[1.0, -0.5]).eval(cx(1.0, 0.0)).unwrap();
        assert!((v - cx(2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn eval_outside_disk_is_domain_error() {
        assert!(matches!(
            r(&[1.0], &[1.0]).eval(cx(1.1, 0.0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn denominator_is_monic_and_certified() {
        let f = r(&[1.0], &[1.0, -0.5]);
        assert_eq!(f.den().leading(), cx(1.0, 0.0));
        // monic form z - 2
        assert!((f.cert().margin - 1.0).abs() < 1e-12);
        assert!(RationalFn::new(Poly::one(), Poly::real(&[0.0, 1.0])).is_err());
    }

    #[test]
    fn derivative_examples() {
        let f = r(&[0.0, 0.0, 1.0], &[1.0]).derivative(1).unwrap();
        assert_eq!(f.num(), &Poly::real(&[0.0, 2.0]));
        // 1/(1 - z/2) -> (1/2)/(1 - z/2)^2
        let f = r(&[1.0], &[1.0, -0.5]);
        let d = f.derivative(1).unwrap();
        for &z in &[cx(0.0, 0.0), cx(0.3, 0.4), cx(-1.0, 0.0)] {
            let expect = cx(0.5, 0.0) / (cx(1.0, 0.0) - z * 0.5).powi(2);
            assert!((d.eval(z).unwrap() - expect).norm() < 1e-13);
        }
        let d = r(&[1.0, 0.0, 0.0, -1.0], &[1.0]).derivative(1).unwrap();
        assert_eq!(d.eval(cx(0.0, 0.0)).unwrap(), cx(0.0, 0.0));
    }

    #[test]
    fn derivatives_at_matches_derivative() {
        let f = r(&[1.0, 2.0, -1.0, 0.5], &[2.0, -1.0, 0.25]);
        let a = cx(0.2, -0.5);
        let jets = f.derivatives_at(a, 3);
        for (k, jk) in jets.iter().enumerate() {
            let dk = f.derivative(k).unwrap().eval(a).unwrap();
            assert!((jk - dk).norm() < 1e-10 * dk.norm().max(1.0), "order {k}");
        }
    }

    #[test]
    fn reduces_certified_common_factor() {
        // (z^2 - 4)/(z - 2) = z + 2
        let f = r(&[-4.0, 0.0, 1.0], &[-2.0, 1.0]).reduce_common_factors();
        assert!(f.is_polynomial());
        assert!(f.num().max_coeff_diff(&Poly::real(&[2.0, 1.0])) < 1e-12);
    }
}

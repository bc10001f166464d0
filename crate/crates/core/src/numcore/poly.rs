use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex scalar.
pub type Cx = Complex64;

/// Trailing coefficients at or below this fraction of the largest
/// coefficient modulus are dropped on construction.
pub const TRIM_TOL: f64 = 1e-15;

pub(crate) fn cx(re: f64, im: f64) -> Cx {
    Cx::new(re, im)
}

pub(crate) fn is_finite(z: Cx) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Dense polynomial with complex coefficients, ascending order.
///
/// The zero polynomial is stored as `[0]`; every other polynomial has a
/// nonzero top coefficient.
#[derive(Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<Cx>,
}

impl Poly {
    pub fn new(coeffs: Vec<Cx>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    /// Builds from real coefficients, ascending.
    pub fn real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| cx(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![Cx::new(0.0, 0.0)] }
    }

    pub fn one() -> Self {
        Self::constant(cx(1.0, 0.0))
    }

    pub fn constant(c: Cx) -> Self {
        Self::new(vec![c])
    }

    /// `c * z^k`
    pub fn monomial(c: Cx, k: usize) -> Self {
        let mut coeffs = vec![Cx::new(0.0, 0.0); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `(z - a)`
    pub fn linear_root(a: Cx) -> Self {
        Poly { coeffs: vec![-a, cx(1.0, 0.0)] }
    }

    /// `prod (z - a_k)^{m_k}`
    pub fn from_roots(roots: &[(Cx, usize)]) -> Self {
        let mut p = Self::one();
        for &(a, m) in roots {
            for _ in 0..m {
                p = p.mul_linear(a);
            }
        }
        p
    }

    fn trim(&mut self) {
        if self.coeffs.is_empty() {
            self.coeffs.push(Cx::new(0.0, 0.0));
            return;
        }
        let scale = self.max_abs();
        while self.coeffs.len() > 1 {
            let top = self.coeffs[self.coeffs.len() - 1].norm();
            if top <= TRIM_TOL * scale {
                self.coeffs.pop();
            } else {
                break;
            }
        }
        if self.coeffs.len() == 1 && self.coeffs[0].norm() == 0.0 {
            self.coeffs[0] = Cx::new(0.0, 0.0);
        }
    }

    pub fn coeffs(&self) -> &[Cx] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Cx> {
        self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Cx {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].norm() == 0.0
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading(&self) -> Cx {
        self.coeffs[self.coeffs.len() - 1]
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Sum of coefficient moduli; bounds `|p|` on the closed disk.
    pub fn l1_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|&c| is_finite(c))
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Cx) -> Cx {
        self.coeffs
            .iter()
            .rev()
            .fold(Cx::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() == 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, &c)| c * j as f64)
                .collect(),
        )
    }

    pub fn nth_derivative(&self, order: usize) -> Poly {
        (0..order).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn scale(&self, c: Cx) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        let mut coeffs: Vec<Cx> = self.coeffs.iter().map(|&a| a / lc).collect();
        let last = coeffs.len() - 1;
        coeffs[last] = cx(1.0, 0.0);
        Poly { coeffs }
    }

    /// `self * (z - a)`
    pub fn mul_linear(&self, a: Cx) -> Poly {
        let mut out = vec![Cx::new(0.0, 0.0); self.coeffs.len() + 1];
        for (j, &c) in self.coeffs.iter().enumerate() {
            out[j + 1] += c;
            out[j] -= a * c;
        }
        Poly::new(out)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Long division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        if divisor.is_zero() {
            return Err(Error::SingularSystem);
        }
        let dd = divisor.degree();
        if self.degree() < dd || self.is_zero() {
            return Ok((Poly::zero(), self.clone()));
        }
        let lc = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Cx::new(0.0, 0.0); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + dd] / lc;
            quot[k] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= q * d;
            }
            rem[k + dd] = Cx::new(0.0, 0.0);
        }
        rem.truncate(dd.max(1));
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Taylor coefficients of `p(a + t)` up to `t^order`, i.e. `p^{(j)}(a)/j!`.
    pub fn taylor_at(&self, a: Cx, order: usize) -> Vec<Cx> {
        // repeated synthetic division by (z - a)
        let mut work = self.coeffs.clone();
        let mut out = Vec::with_capacity(order + 1);
        for _ in 0..=order {
            if work.is_empty() {
                out.push(Cx::new(0.0, 0.0));
                continue;
            }
            let n = work.len();
            let mut acc = Cx::new(0.0, 0.0);
            let mut quot = vec![Cx::new(0.0, 0.0); n.saturating_sub(1)];
            for k in (0..n).rev() {
                acc = acc * a + work[k];
                if k > 0 {
                    quot[k - 1] = acc;
                }
            }
            out.push(acc);
            work = quot;
        }
        out
    }

    /// Coefficientwise distance, padding the shorter polynomial with zeros.
    pub fn max_coeff_diff(&self, other: &Poly) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|k| (self.coeff(k) - other.coeff(k)).norm())
            .fold(0.0, f64::max)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[")?;
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}{:+}i", c.re, c.im)?;
        }
        write!(f, "]")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Cx::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Truncated power-series reciprocal: the first `n` coefficients of `1/s`.
pub fn series_reciprocal(s: &[Cx], n: usize) -> Result<Vec<Cx>> {
    let s0 = s.first().copied().unwrap_or_default();
    if s0.norm() == 0.0 {
        return Err(Error::SingularSystem);
    }
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = if k == 0 { cx(1.0, 0.0) } else { Cx::new(0.0, 0.0) };
        for j in 1..=k {
            if let Some(&sj) = s.get(j) {
                acc -= sj * out[k - j];
            }
        }
        out.push(acc / s0);
    }
    Ok(out)
}

/// Truncated power-series product, first `n` coefficients.
pub fn series_mul(a: &[Cx], b: &[Cx], n: usize) -> Vec<Cx> {
    (0..n)
        .map(|k| {
            (0..=k)
                .filter_map(|j| Some(*a.get(j)? * *b.get(k - j)?))
                .sum()
        })
        .collect()
}

/// `k!` as a float.
pub fn factorial(k: usize) -> f64 {
    (1..=k).fold(1.0, |acc, j| acc * j as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Poly {
        Poly::real(&[0.0, 1.0])
    }

    #[test]
    fn trims_and_represents_zero() {
        let p = Poly::real(&[1.0, 2.0, 0.0, 0.0]);
        assert_eq!(p.degree(), 1);
        let zero = Poly::real(&[0.0, 0.0]);
        assert!(zero.is_zero());
        assert_eq!(zero.coeffs().len(), 1);
        assert!(Poly::new(vec![]).is_zero());
    }

    #[test]
    fn horner_eval() {
        let p = Poly::real(&[0.0, 0.0, 1.0]);
        assert!((p.eval(cx(0.0, 1.0)) - cx(-1.0, 0.0)).norm() < 1e-15);
        assert_eq!(Poly::real(&[1.0, 1.0]).eval(cx(0.0, 0.0)), cx(1.0, 0.0));
    }

    #[test]
    fn div_rem_exact() {
        // (1 - z^3) = (-z) * z^2 + 1
        let (q, r) = Poly::real(&[1.0, 0.0, 0.0, -1.0])
            .div_rem(&Poly::real(&[0.0, 0.0, 1.0]))
            .unwrap();
        assert_eq!(q, Poly::real(&[0.0, -1.0]));
        assert_eq!(r, Poly::one());
        let (q, r) = Poly::one().div_rem(&z()).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, Poly::one());
    }

    #[test]
    fn taylor_shift_matches_derivatives() {
        let p = Poly::real(&[1.0, -2.0, 0.5, 3.0]);
        let a = cx(0.3, -0.2);
        let t = p.taylor_at(a, 4);
        let mut d = p.clone();
        for (j, tj) in t.iter().enumerate() {
            let expect = d.eval(a) / factorial(j);
            assert!((tj - expect).norm() < 1e-13, "order {j}");
            d = d.derivative();
        }
    }

    #[test]
    fn series_reciprocal_of_geometric() {
        // 1/(1 - t) = 1 + t + t^2 + ...
        let r = series_reciprocal(&[cx(1.0, 0.0), cx(-1.0, 0.0)], 5).unwrap();
        for c in r {
            assert!((c - cx(1.0, 0.0)).norm() < 1e-15);
        }
        assert!(series_reciprocal(&[Cx::new(0.0, 0.0)], 2).is_err());
    }

    #[test]
    fn from_roots_expands() {
        let p = Poly::from_roots(&[(cx(0.0, 0.0), 2), (cx(0.5, 0.0), 1)]);
        assert_eq!(p, Poly::real(&[0.0, 0.0, -0.5, 1.0]));
    }
}

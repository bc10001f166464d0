//! Double-double complex arithmetic (about 32 significant digits) for the
//! few kernels whose outputs are compared coefficientwise.

use std::ops::{Add, Mul, Neg, Sub};

use super::poly::{Cx, Poly};

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    pub fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn recip(self) -> Dd {
        // Newton step on the f64 reciprocal
        let y = Dd::new(1.0 / self.hi);
        let e = Dd::new(1.0) - self * y;
        y + y * e
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, o: Dd) -> Dd {
        self + (-o)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub const ZERO: Cdd = Cdd { re: Dd::ZERO, im: Dd::ZERO };
    pub const ONE: Cdd = Cdd { re: Dd { hi: 1.0, lo: 0.0 }, im: Dd::ZERO };

    pub fn from_cx(z: Cx) -> Self {
        Cdd { re: Dd::new(z.re), im: Dd::new(z.im) }
    }

    pub fn to_cx(self) -> Cx {
        Cx::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn recip(self) -> Cdd {
        let inv = (self.re * self.re + self.im * self.im).recip();
        Cdd { re: self.re * inv, im: -(self.im * inv) }
    }

    pub fn scale(self, s: f64) -> Cdd {
        Cdd { re: self.re * Dd::new(s), im: self.im * Dd::new(s) }
    }
}

impl Add for Cdd {
    type Output = Cdd;
    fn add(self, o: Cdd) -> Cdd {
        Cdd { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for Cdd {
    type Output = Cdd;
    fn sub(self, o: Cdd) -> Cdd {
        Cdd { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Neg for Cdd {
    type Output = Cdd;
    fn neg(self) -> Cdd {
        Cdd { re: -self.re, im: -self.im }
    }
}

impl Mul for Cdd {
    type Output = Cdd;
    fn mul(self, o: Cdd) -> Cdd {
        Cdd { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }
}

/// Dense ascending polynomial over [`Cdd`]; no trimming.
#[derive(Debug, Clone, PartialEq)]
pub struct DdPoly(pub Vec<Cdd>);

impl DdPoly {
    pub fn constant(c: Cdd) -> Self {
        DdPoly(vec![c])
    }

    pub fn zero() -> Self {
        DdPoly(vec![Cdd::ZERO])
    }

    /// `prod (z - a)^m`.
    pub fn from_roots(roots: &[(Cx, usize)]) -> Self {
        let mut p = DdPoly::constant(Cdd::ONE);
        for &(a, m) in roots {
            for _ in 0..m {
                p = p.mul_linear(Cdd::from_cx(a));
            }
        }
        p
    }

    /// `p * (z - a)`.
    pub fn mul_linear(&self, a: Cdd) -> Self {
        let n = self.0.len();
        let mut out = vec![Cdd::ZERO; n + 1];
        for (k, &c) in self.0.iter().enumerate() {
            out[k + 1] = out[k + 1] + c;
            out[k] = out[k] - a * c;
        }
        DdPoly(out)
    }

    pub fn mul(&self, o: &DdPoly) -> Self {
        let mut out = vec![Cdd::ZERO; self.0.len() + o.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in o.0.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        DdPoly(out)
    }

    pub fn add(&self, o: &DdPoly) -> Self {
        let n = self.0.len().max(o.0.len());
        DdPoly(
            (0..n)
                .map(|k| {
                    self.0.get(k).copied().unwrap_or(Cdd::ZERO) + o.0.get(k).copied().unwrap_or(Cdd::ZERO)
                })
                .collect(),
        )
    }

    pub fn scale(&self, c: Cdd) -> Self {
        DdPoly(self.0.iter().map(|&v| v * c).collect())
    }

    pub fn eval(&self, z: Cdd) -> Cdd {
        self.0.iter().rev().fold(Cdd::ZERO, |acc, &c| acc * z + c)
    }

    /// Taylor coefficients `p^{(l)}(a)/l!`, `l <= order`, by repeated
    /// synthetic division.
    pub fn taylor_at(&self, a: Cdd, order: usize) -> Vec<Cdd> {
        let mut work = self.0.clone();
        let mut out = Vec::with_capacity(order + 1);
        for _ in 0..=order {
            if work.is_empty() {
                out.push(Cdd::ZERO);
                continue;
            }
            // divide by (z - a): remainder is the value at a
            let mut carry = Cdd::ZERO;
            let mut quot = vec![Cdd::ZERO; work.len().saturating_sub(1)];
            for k in (0..work.len()).rev() {
                carry = carry * a + work[k];
                if k > 0 {
                    quot[k - 1] = carry;
                }
            }
            out.push(carry);
            work = quot;
        }
        out
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.0.iter().map(|c| c.to_cx()).collect())
    }
}

/// First `n` coefficients of `1/s`; `s[0]` must be nonzero.
pub fn series_reciprocal(s: &[Cdd], n: usize) -> Vec<Cdd> {
    let inv0 = s[0].recip();
    let mut out = Vec::with_capacity(n);
    out.push(inv0);
    for k in 1..n {
        let acc = (1..=k.min(s.len() - 1)).fold(Cdd::ZERO, |acc, j| acc + s[j] * out[k - j]);
        out.push(-(acc * inv0));
    }
    out
}

//! Complex polynomial and rational-function arithmetic.
//!
//! Everything here is a pure function of immutable values.

mod certify;
pub mod dd;
mod euclid;
mod poly;
mod rational;

pub use certify::{certify_nonvanishing, NonvanishingCert};
pub use euclid::{poly_ext_gcd, poly_ext_gcd_eps, GcdResult, EUCLID_EPS};
pub use poly::{factorial, series_mul, series_reciprocal, Cx, Poly, TRIM_TOL};
pub(crate) use poly::{cx, is_finite};
pub use rational::{RationalFn, CERT_SAMPLES, DOMAIN_TOL};

/// Shorthand for `Cx::new(re, im)`.
pub fn c(re: f64, im: f64) -> Cx {
    Cx::new(re, im)
}

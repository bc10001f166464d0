// Measuring `delta = inf sum |f_k|` on the disk, with and without a
// common zero.
//
// ```text
// cargo run --example corona_delta
// ```

use corona::numcore::{c, Poly, RationalFn};
use corona::verify::{corona_delta_estimate, sup_norm, GridConfig};

pub struct Deltas {
    pub coprime: f64,
    pub common_zero: f64,
    pub sup_f1: f64,
}

pub fn run() -> Deltas {
    let grid = GridConfig::default();
    let f1 = RationalFn::from_poly(Poly::real(&[0.0, 0.0, 1.0]));
    let f2 = RationalFn::from_poly(Poly::real(&[1.0, 0.0, 0.0, -1.0]));
    // both vanish at z = 0.5
    let z0 = c(0.5, 0.0);
    let g1 = RationalFn::from_poly(Poly::linear_root(z0));
    let g2 = RationalFn::from_poly(Poly::linear_root(z0).mul_linear(c(-0.2, 0.1)));
    Deltas {
        coprime: corona_delta_estimate(&[f1.clone(), f2], &grid).value,
        common_zero: corona_delta_estimate(&[g1, g2], &grid).value,
        sup_f1: sup_norm(&f1, &grid),
    }
}

fn main() {
    let d = run();
    println!("delta(z^2, 1 - z^3) = {:.6}", d.coprime);
    println!("delta with a common zero = {:.2e}", d.common_zero);
    println!("||z^2||_inf = {:.6}", d.sup_f1);
}

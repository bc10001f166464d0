// Hermite interpolation at the zeros of `B`, checked against the
// confluent Vandermonde oracle.
//
// ```text
// cargo run --example hermite
// ```

use corona::blaschke::BlaschkeSpec;
use corona::interp::{hermite_interpolate, hermite_oracle, JetTarget};
use corona::numcore::{c, Poly};

pub fn run() -> corona::Result<(Poly, f64)> {
    let spec = BlaschkeSpec::new(vec![(c(0.2, 0.1), 3), (c(-0.6, 0.0), 1), (c(0.0, 0.7), 2)])?;
    let target = JetTarget::new(
        &spec,
        vec![
            vec![c(1.0, 0.0), c(0.0, 2.0), c(-1.0, 0.0)],
            vec![c(0.5, -0.5)],
            vec![c(0.0, 0.0), c(3.0, 0.0)],
        ],
    )?;
    let p = hermite_interpolate(&spec, &target)?;
    let q = hermite_oracle(&spec, &target)?;
    let diff = p.max_coeff_diff(&q);
    Ok((p, diff))
}

fn main() -> corona::Result<()> {
    let (p, diff) = run()?;
    println!("degree {}", p.degree());
    for (k, a) in p.coeffs().iter().enumerate() {
        println!("  z^{k}: {a:.6}");
    }
    println!("max coefficient difference against the oracle {diff:.1e}");
    Ok(())
}

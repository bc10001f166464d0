// Reducing a unimodular pair: find `h` in the algebra with `f + h g`
// invertible.
//
// ```text
// cargo run --example stable_rank
// ```

use corona::blaschke::BlaschkeSpec;
use corona::numcore::{c, Poly, RationalFn};
use corona::reduce::{reduce_pair, ReductionCert, SearchBudget, UnimodularPair};
use corona::verify::GridConfig;

fn poly(coeffs: &[f64]) -> RationalFn {
    RationalFn::from_poly(Poly::real(coeffs))
}

pub fn run() -> corona::Result<Vec<ReductionCert>> {
    let spec = BlaschkeSpec::single(c(0.0, 0.0), 2)?;
    let grid = GridConfig::default();
    let budget = SearchBudget::default();
    let pairs = [
        (poly(&[1.0, 0.0, -0.5]), poly(&[0.0, 0.0, 1.0])),
        (poly(&[0.0, 0.0, 1.0]), poly(&[1.0])),
        (poly(&[0.0, 0.0, 1.0]), poly(&[1.0, 0.0, 1.0])),
    ];
    pairs
        .into_iter()
        .map(|(f, g)| {
            let pair = UnimodularPair::new(f, g, spec.clone(), None, 1e-10, &grid)?;
            reduce_pair(&pair, &budget)
        })
        .collect()
}

fn show(p: &Poly) -> String {
    let terms: Vec<String> = p.coeffs().iter().map(|a| format!("{a:.3}")).collect();
    format!("[{}]", terms.join(", "))
}

fn main() -> corona::Result<()> {
    for (k, cert) in run()?.iter().enumerate() {
        println!(
            "pair {k}: h = {}, min |f + h g| = {:.6}, case {:?}, stage {:?}",
            show(cert.h.num()),
            cert.inverse_margin,
            cert.case,
            cert.stage
        );
    }
    Ok(())
}

// Constrained Bezout solve for `f = (z^2, 1 - z^3)` with `B = z^2`.
//
// ```text
// cargo run --example worked_solve
// ```

use corona::blaschke::BlaschkeSpec;
use corona::numcore::{c, Poly, RationalFn};
use corona::solver::{constrained_solve, CoronaInstance, SolveConfig, SolveReport};

pub fn run() -> corona::Result<SolveReport> {
    let spec = BlaschkeSpec::single(c(0.0, 0.0), 2)?;
    let f = vec![
        RationalFn::from_poly(Poly::real(&[0.0, 0.0, 1.0])),
        RationalFn::from_poly(Poly::real(&[1.0, 0.0, 0.0, -1.0])),
    ];
    let inst = CoronaInstance::new(f, spec, None, 1e-12)?;
    constrained_solve(&inst, &SolveConfig::default())
}

fn show(p: &Poly) -> String {
    let terms: Vec<String> = p.coeffs().iter().map(|a| format!("{a:.3}")).collect();
    format!("[{}]", terms.join(", "))
}

fn main() -> corona::Result<()> {
    let r = run()?;
    for (k, g) in r.g.iter().enumerate() {
        println!("g[{k}] = {}", show(g.num()));
    }
    println!("residual {:.2e}, max defect {:.2e}", r.residual, r.max_defect());
    println!("cofactors {:?}, refinements {}", r.cofactors, r.refinements);
    Ok(())
}

// The ideal-algebra solution and its measured norm bound.
//
// ```text
// cargo run --example ideal_solve
// ```

use corona::blaschke::BlaschkeSpec;
use corona::numcore::{c, Poly, RationalFn};
use corona::solver::{ideal_solve, CoronaInstance, IdealBound, SolveConfig};

pub fn run() -> corona::Result<(f64, IdealBound)> {
    let spec = BlaschkeSpec::new(vec![(c(0.3, 0.0), 1), (c(-0.2, 0.4), 2)])?;
    let b = spec.zero_polynomial();
    // c + B q for two different constants and multipliers
    let f1 = RationalFn::from_poly(b.scale(c(0.5, 0.0))).add_const(c(0.4, 0.0));
    let f2 = RationalFn::from_poly(&b * &Poly::real(&[0.0, 0.3])).add_const(c(0.0, -0.2));
    let inst = CoronaInstance::new(vec![f1, f2], spec, None, 1e-10)?;
    let r = ideal_solve(&inst, &SolveConfig::default())?;
    Ok((r.residual, r.ideal_bound.expect("ideal path reports its bound")))
}

fn main() -> corona::Result<()> {
    let (residual, bound) = run()?;
    println!("residual {residual:.2e}");
    println!("max ||g_k|| = {:.4}, bound {:.4}, holds {}", bound.max_g_norm, bound.bound, bound.holds);
    Ok(())
}

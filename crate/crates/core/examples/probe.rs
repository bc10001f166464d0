// Seeded random corona data solved on both paths, reporting the largest
// cofactor norm per instance.
//
// ```text
// cargo run --release --example probe
// ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use corona::sample::{random_corona_instance, random_spec, InstanceRecipe};
use corona::solver::{constrained_solve, ideal_solve, SolveConfig};

pub struct Row {
    pub delta: f64,
    pub constrained_norm: f64,
    pub ideal_norm: f64,
    pub residual: f64,
}

pub fn run(seed: u64, count: usize) -> corona::Result<Vec<Row>> {
    let cfg = SolveConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(count);
    while rows.len() < count {
        let spec = random_spec(&mut rng, 3, 2, 0.8, 0.1);
        let recipe = InstanceRecipe { n: 2, max_degree: 4, ..InstanceRecipe::default() };
        let Some(s) = random_corona_instance(&mut rng, &spec, &recipe, &cfg.grid)? else {
            continue;
        };
        let a = constrained_solve(&s.instance, &cfg)?;
        let b = ideal_solve(&s.instance, &cfg)?;
        rows.push(Row {
            delta: s.delta,
            constrained_norm: a.max_g_norm(),
            ideal_norm: b.max_g_norm(),
            residual: a.residual.max(b.residual),
        });
    }
    Ok(rows)
}

fn main() -> corona::Result<()> {
    println!("{:>8} {:>14} {:>14} {:>10}", "delta", "constrained", "ideal", "residual");
    for r in run(1, 8)? {
        println!("{:8.4} {:14.4} {:14.4} {:10.1e}", r.delta, r.constrained_norm, r.ideal_norm, r.residual);
    }
    Ok(())
}

//! Seeded random corona data: members `c + B q` rejection-sampled to a
//! minimum measured `delta` after normalizing `sup sum |f_k| = 1`.

use std::f64::consts::PI;

use rand::Rng;

use crate::blaschke::{build_blaschke, BlaschkeSpec};
use crate::error::Result;
use crate::numcore::{cx, Cx, Poly, RationalFn};
use crate::solver::{measured_delta, CoronaInstance};
use crate::verify::{sup_sum, GridConfig};

/// Uniform point in the disk of radius `r`.
pub fn random_in_disk<R: Rng + ?Sized>(rng: &mut R, r: f64) -> Cx {
    let rho = r * rng.gen::<f64>().sqrt();
    Cx::from_polar(rho, 2.0 * PI * rng.gen::<f64>())
}

/// Blaschke data with up to `max_points` zeros in `|a| <= radius`, pairwise
/// at least `min_separation` apart, multiplicities up to `max_mult`.
pub fn random_spec<R: Rng + ?Sized>(
    rng: &mut R,
    max_points: usize,
    max_mult: usize,
    radius: f64,
    min_separation: f64,
) -> BlaschkeSpec {
    let count = rng.gen_range(1..=max_points);
    let mut points: Vec<(Cx, usize)> = Vec::with_capacity(count);
    while points.len() < count {
        let a = random_in_disk(rng, radius);
        if points.iter().all(|&(b, _)| (a - b).norm() >= min_separation) {
            points.push((a, rng.gen_range(1..=max_mult)));
        }
    }
    BlaschkeSpec::new(points).expect("sampled zeros satisfy the spec invariants")
}

/// `c + B q` for `b = B`, with `|c| <= 1` and `q` of random degree `<= max_degree`,
/// coefficients in the unit disk.
pub fn random_member<R: Rng + ?Sized>(
    rng: &mut R,
    b: &RationalFn,
    max_degree: usize,
) -> RationalFn {
    let c = random_in_disk(rng, 1.0);
    let degree = rng.gen_range(0..=max_degree);
    let q = Poly::new((0..=degree).map(|_| random_in_disk(rng, 1.0)).collect());
    b.mul_poly(&q).add_const(c)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceRecipe {
    pub n: usize,
    pub max_degree: usize,
    pub delta_min: f64,
    pub max_attempts: usize,
}

impl Default for InstanceRecipe {
    fn default() -> Self {
        InstanceRecipe { n: 2, max_degree: 6, delta_min: 0.05, max_attempts: 500 }
    }
}

/// A sampled instance with its measured constants.
#[derive(Debug, Clone)]
pub struct SampledInstance {
    pub instance: CoronaInstance,
    pub delta: f64,
    pub attempts: usize,
}

/// Draws members until the normalized data has measured `delta >=
/// recipe.delta_min`; `None` after `max_attempts` rejections.
pub fn random_corona_instance<R: Rng + ?Sized>(
    rng: &mut R,
    spec: &BlaschkeSpec,
    recipe: &InstanceRecipe,
    grid: &GridConfig,
) -> Result<Option<SampledInstance>> {
    let b = build_blaschke(spec);
    for attempt in 1..=recipe.max_attempts {
        let raw: Vec<RationalFn> =
            (0..recipe.n).map(|_| random_member(rng, &b, recipe.max_degree)).collect();
        let top = sup_sum(&raw, grid);
        if !(top > 0.0) {
            continue;
        }
        let scale = cx((1.0 - 1e-9) / top, 0.0);
        let f: Vec<RationalFn> = raw.iter().map(|fk| fk.scale(scale)).collect();
        let delta = measured_delta(&f, spec, grid);
        if delta >= recipe.delta_min {
            // members by construction, up to roundoff
            let instance = CoronaInstance::new(f, spec.clone(), None, 1e-8)?;
            return Ok(Some(SampledInstance { instance, delta, attempts: attempt }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blaschke::check_membership;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn members_are_members() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let spec = random_spec(&mut rng, 3, 3, 0.8, 0.05);
            let b = build_blaschke(&spec);
            let f = random_member(&mut rng, &b, 6);
            assert!(check_membership(&f, &spec, 1e-10).passed);
        }
    }

    #[test]
    fn sampled_instances_meet_the_recipe() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let spec = BlaschkeSpec::single(cx(0.0, 0.0), 2).unwrap();
        let grid = GridConfig::default();
        let s = random_corona_instance(&mut rng, &spec, &InstanceRecipe::default(), &grid)
            .unwrap()
            .unwrap();
        assert!(s.delta >= 0.05);
        assert!(sup_sum(&s.instance.f, &grid) <= 1.0);
    }
}

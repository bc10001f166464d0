// Building `B`, testing membership in `C + B H^inf` and splitting
// `f = c + B h`.
//
// ```text
// cargo run --example blaschke_membership
// ```

use corona::blaschke::{build_blaschke, check_membership, decompose, recompose, BlaschkeSpec};
use corona::numcore::{c, Cx, Poly, RationalFn};

pub struct Split {
    pub member_passed: bool,
    pub outsider_passed: bool,
    pub constant: Cx,
    pub round_trip: f64,
}

pub fn run() -> corona::Result<Split> {
    let spec = BlaschkeSpec::new(vec![(c(0.5, 0.0), 2), (c(0.0, -0.3), 1)])?;
    let b = build_blaschke(&spec);
    let member = b.mul_poly(&Poly::real(&[1.0, -0.5])).add_const(c(0.25, 0.5));
    let outsider = RationalFn::from_poly(Poly::real(&[0.0, 1.0]));

    let (constant, h) = decompose(&member, &spec, 1e-10)?;
    let back = recompose(constant, &h, &spec)?;
    let z = c(0.1, 0.7);
    let round_trip = (back.eval(z)? - member.eval(z)?).norm();
    Ok(Split {
        member_passed: check_membership(&member, &spec, 1e-10).passed,
        outsider_passed: check_membership(&outsider, &spec, 1e-10).passed,
        constant,
        round_trip,
    })
}

fn main() -> corona::Result<()> {
    let s = run()?;
    println!("c + B q is a member: {}", s.member_passed);
    println!("z is a member: {}", s.outsider_passed);
    println!("c = {}, round trip error {:.1e}", s.constant, s.round_trip);
    Ok(())
}

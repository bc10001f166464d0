use proptest::prelude::*;

use corona::blaschke::{build_blaschke, check_membership, decompose, recompose, BlaschkeSpec};
use corona::interp::{hermite_interpolate, JetTarget};
use corona::numcore::{c, poly_ext_gcd, Cx, Poly, RationalFn};
use corona::skew::{bilinear, norm, skew_solve};

fn cx_in(r: f64) -> impl Strategy<Value = Cx> {
    (-r..r, -r..r).prop_map(|(a, b)| c(a, b))
}

fn poly_of(max_degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(cx_in(1.0), 1..=max_degree + 1).prop_map(Poly::new)
}

fn spec_of() -> impl Strategy<Value = BlaschkeSpec> {
    prop::collection::vec((cx_in(0.6), 1usize..=3), 1..=3).prop_filter_map("separated zeros", |pts| {
        let ok = (0..pts.len()).all(|i| (i + 1..pts.len()).all(|j| (pts[i].0 - pts[j].0).norm() >= 0.1));
        if ok && pts.iter().all(|p| p.0.norm() < 0.85) {
            BlaschkeSpec::new(pts).ok()
        } else {
            None
        }
    })
}

fn probe_points() -> Vec<Cx> {
    vec![c(0.0, 0.0), c(0.3, -0.2), c(-0.7, 0.1), c(0.5, 0.5), c(1.0, 0.0), c(0.0, -1.0)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn evaluation_is_multiplicative(p in poly_of(6), q in poly_of(6), z in cx_in(1.0)) {
        let lhs = (&p * &q).eval(z);
        let rhs = p.eval(z) * q.eval(z);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()));
    }

    #[test]
    fn derivative_matches_central_difference(p in poly_of(6), z in cx_in(0.9)) {
        let h = 1e-5;
        let fd = (p.eval(z + c(h, 0.0)) - p.eval(z - c(h, 0.0))) / (2.0 * h);
        prop_assert!((p.derivative().eval(z) - fd).norm() <= 1e-7 * (1.0 + p.l1_norm() * 50.0));
    }

    #[test]
    fn ext_gcd_cofactors_reproduce_the_gcd(ps in prop::collection::vec(poly_of(5), 2..=3)) {
        prop_assume!(ps.iter().all(|p| !p.is_zero()));
        if let Ok(r) = poly_ext_gcd(&ps) {
            let combo = ps.iter().zip(&r.cofactors).fold(Poly::zero(), |acc, (p, u)| &acc + &(p * u));
            let scale = ps.iter().zip(&r.cofactors).map(|(p, u)| p.l1_norm() * u.l1_norm()).sum::<f64>().max(1.0);
            for z in probe_points() {
                prop_assert!((combo.eval(z) - r.gcd.eval(z)).norm() <= 1e-9 * scale);
            }
            prop_assert!((r.gcd.leading() - c(1.0, 0.0)).norm() <= 1e-12);
        }
    }

    #[test]
    fn hermite_is_linear(spec in spec_of(), alpha in cx_in(2.0), seed in any::<u64>()) {
        let mut s = seed;
        let mut next = || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            c(((s >> 11) as f64 / (1u64 << 53) as f64) - 0.5, ((s >> 20) as f64 / (1u64 << 44) as f64) - 0.5)
        };
        let shape: Vec<usize> = spec.points().iter().map(|p| p.1).collect();
        let t1: Vec<Vec<Cx>> = shape.iter().map(|&m| (0..m).map(|_| next()).collect()).collect();
        let t2: Vec<Vec<Cx>> = shape.iter().map(|&m| (0..m).map(|_| next()).collect()).collect();
        let mix: Vec<Vec<Cx>> = t1.iter().zip(&t2)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| alpha * x + y).collect())
            .collect();
        let p1 = hermite_interpolate(&spec, &JetTarget::new(&spec, t1).unwrap()).unwrap();
        let p2 = hermite_interpolate(&spec, &JetTarget::new(&spec, t2).unwrap()).unwrap();
        let pm = hermite_interpolate(&spec, &JetTarget::new(&spec, mix).unwrap()).unwrap();
        let combo = &p1.scale(alpha) + &p2;
        prop_assert!(pm.max_coeff_diff(&combo) <= 1e-9 * (1.0 + combo.max_abs()));
        prop_assert!(pm.is_zero() || pm.degree() < spec.total_degree());
    }

    #[test]
    fn hermite_meets_its_jets(spec in spec_of(), v in prop::collection::vec(cx_in(1.0), 9)) {
        let values: Vec<Vec<Cx>> = spec.points().iter().enumerate()
            .map(|(k, &(_, m))| (0..m).map(|j| v[(3 * k + j) % 9]).collect())
            .collect();
        let p = hermite_interpolate(&spec, &JetTarget::new(&spec, values.clone()).unwrap()).unwrap();
        let f = RationalFn::from_poly(p);
        for (&(a, m), want) in spec.points().iter().zip(&values) {
            let got = f.derivatives_at(a, m - 1);
            for (g, w) in got.iter().zip(want) {
                prop_assert!((g - w).norm() <= 1e-8);
            }
        }
    }

    #[test]
    fn skew_solution_is_antisymmetric_and_bounded(
        x in prop::collection::vec(cx_in(1.0), 2..=8),
        y0 in prop::collection::vec(cx_in(1.0), 8),
    ) {
        prop_assume!(norm(&x) > 1e-3);
        let y0 = &y0[..x.len()];
        let p = bilinear(&x, y0) / (norm(&x) * norm(&x));
        let y: Vec<Cx> = y0.iter().zip(&x).map(|(v, u)| v - p * u.conj()).collect();
        prop_assume!(norm(&y) > 1e-6);
        let a = skew_solve(&x, &y).unwrap();
        let d = a.to_dense();
        let n = x.len();
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(d[i][j], -d[j][i]);
            }
        }
        let ax = a.apply(&x).unwrap();
        let err: Vec<Cx> = ax.iter().zip(&y).map(|(u, v)| u - v).collect();
        prop_assert!(norm(&err) <= 1e-10 * norm(&y));
        prop_assert!(a.frobenius_norm() <= (2.0 * n as f64).sqrt() * norm(&y) / norm(&x) * (1.0 + 1e-12));
    }

    #[test]
    fn members_decompose_and_recompose(spec in spec_of(), q in poly_of(5), c0 in cx_in(1.0)) {
        let f = build_blaschke(&spec).mul_poly(&q).add_const(c0);
        prop_assert!(check_membership(&f, &spec, 1e-8).passed);
        let (k, h) = decompose(&f, &spec, 1e-8).unwrap();
        prop_assert!((k - c0).norm() <= 1e-9);
        let g = recompose(k, &h, &spec).unwrap();
        for z in probe_points() {
            prop_assert!((g.eval(z).unwrap() - f.eval(z).unwrap()).norm() <= 1e-9);
        }
    }

    #[test]
    fn membership_iff_decomposable(spec in spec_of(), p in poly_of(6), q in poly_of(3), member in any::<bool>()) {
        let f = if member {
            build_blaschke(&spec).mul_poly(&q).add_const(p.coeff(0))
        } else {
            RationalFn::from_poly(p)
        };
        let passed = check_membership(&f, &spec, 1e-8).passed;
        prop_assert!(!member || passed);
        prop_assert_eq!(passed, decompose(&f, &spec, 1e-8).is_ok());
    }
}

//! Every runnable example, executed as a test.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }
    };
}

example!(worked_solve);
example!(ideal_solve);
example!(blaschke_membership);
example!(hermite);
example!(skew_lemma);
example!(corona_delta);
example!(stable_rank);
example!(probe);
example!(cli_file);

#[test]
fn worked_solve_reproduces_the_textbook_cofactors() {
    let r = worked_solve::run().unwrap();
    assert!(r.residual <= 1e-12);
    assert!(r.g[0].num().max_coeff_diff(&corona::numcore::Poly::real(&[0.0, 0.0, 0.0, 0.0, 1.0])) <= 1e-12);
    assert!(r.g[1].num().max_coeff_diff(&corona::numcore::Poly::real(&[1.0, 0.0, 0.0, 1.0])) <= 1e-12);
}

#[test]
fn ideal_solve_respects_its_bound() {
    let (residual, bound) = ideal_solve::run().unwrap();
    assert!(residual <= 1e-8);
    assert!(bound.holds && bound.max_g_norm <= bound.bound);
}

#[test]
fn blaschke_membership_separates_members() {
    let s = blaschke_membership::run().unwrap();
    assert!(s.member_passed);
    assert!(!s.outsider_passed);
    assert!((s.constant - corona::numcore::c(0.25, 0.5)).norm() <= 1e-12);
    assert!(s.round_trip <= 1e-12);
}

#[test]
fn hermite_agrees_with_oracle() {
    let (p, diff) = hermite::run().unwrap();
    assert!(p.degree() <= 5);
    assert!(diff <= 1e-10);
}

#[test]
fn skew_lemma_bound() {
    let l = skew_lemma::run().unwrap();
    assert!(l.residual <= 1e-12);
    assert!(l.frobenius <= l.bound);
    assert_eq!(l.antisymmetry, 0.0);
}

#[test]
fn corona_delta_detects_common_zero() {
    let d = corona_delta::run();
    assert!((d.coprime - 1.0).abs() <= 1e-6);
    assert!(d.common_zero <= 1e-3);
    assert!((d.sup_f1 - 1.0).abs() <= 1e-12);
}

#[test]
fn stable_rank_margins() {
    let certs = stable_rank::run().unwrap();
    let margins: Vec<f64> = certs.iter().map(|c| c.inverse_margin).collect();
    assert!((margins[0] - 0.5).abs() <= 1e-6);
    assert!((margins[1] - 1.0).abs() <= 1e-6);
    assert!(margins[2] > 0.0);
}

#[test]
fn probe_rows_solve() {
    let rows = probe::run(3, 4).unwrap();
    assert_eq!(rows.len(), 4);
    for r in rows {
        assert!(r.delta >= 0.05 && r.residual <= 1e-8);
        assert!(r.constrained_norm.is_finite() && r.ideal_norm.is_finite());
    }
}

#[test]
fn cli_file_round_trip() {
    let outcomes = cli_file::run().unwrap();
    assert_eq!(outcomes.len(), 3);
    assert!(outcomes.iter().all(|o| o.code == corona::cli::EXIT_OK));
    assert!(outcomes[0].report.contains("\"status\": \"ok\""));
}

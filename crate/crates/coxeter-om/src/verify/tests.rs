use super::*;
use crate::scalars::Rational;

fn rq(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn assert_recheck_clean(report: &ScenarioReport) {
    for (id, ok) in recheck(report) {
        assert!(ok, "certificate recheck failed for {id}");
    }
}

#[test]
fn trichotomy_small_runs() {
    for n in [2usize, 3] {
        let report = run_trichotomy(n, 25, 7);
        assert!(report.passed, "n={n}: {:#?}", report.checks);
        assert!(!report.contaminated);
        assert_recheck_clean(&report);
    }
}

#[test]
fn trichotomy_reports_are_reproducible() {
    let a = run_trichotomy(3, 10, 42);
    let b = run_trichotomy(3, 10, 42);
    assert_eq!(a.canonical_bytes(), b.canonical_bytes());
    let c = run_trichotomy(3, 10, 43);
    assert_ne!(a.canonical_bytes(), c.canonical_bytes());
}

#[test]
fn rank3_identical_pair_is_trivially_constant() {
    let (a, _) = standard_a2_tilde_pair();
    let report = run_rank3_homotopy(&a, &a, 12, 8, 3);
    assert!(report.passed, "{:#?}", report.checks);
    assert_recheck_clean(&report);
}

#[test]
fn rank3_affine_pair_small_grid() {
    let (a, b) = standard_a2_tilde_pair();
    let report = run_rank3_homotopy(&a, &b, 10, 10, 11);
    assert!(report.passed, "{:#?}", report.checks);
    assert_recheck_clean(&report);
}

#[test]
fn rank3_233_pair_small_grid() {
    let (a, b) = standard_233_pair();
    let report = run_rank3_homotopy(&a, &b, 10, 10, 13);
    assert!(report.passed, "{:#?}", report.checks);
}

#[test]
fn example61_signs() {
    // a = b = 1: probe sign is sgn(d - c)
    let zero = run_example_61(3, 3, rq(2, 1), rq(2, 1)).unwrap();
    assert!(zero.passed, "{:#?}", zero.checks);
    let plus = run_example_61(3, 3, rq(2, 1), rq(3, 1)).unwrap();
    assert!(plus.passed);
    let minus = run_example_61(3, 3, rq(3, 1), rq(2, 1)).unwrap();
    assert!(minus.passed);
    // quad tower variant
    let quint = run_example_61(5, 3, rq(2, 1), rq(2, 1)).unwrap();
    assert!(quint.passed, "{:#?}", quint.checks);
    for r in [&zero, &plus, &minus, &quint] {
        assert_recheck_clean(r);
    }
    // invalid parameters are rejected
    assert!(run_example_61(3, 3, rq(1, 1), rq(2, 1)).is_err());
    assert!(run_example_61(4, 3, rq(2, 1), rq(2, 1)).is_err());
}

#[test]
fn example62_runs_at_reduced_depth() {
    let report = run_example_62(Example62Params {
        depth: 8,
        biclosed_depth: 4,
    });
    assert!(report.passed, "{:#?}", report.checks);
    assert!(!report.contaminated);
    assert_recheck_clean(&report);
}

#[test]
fn example62_reports_insufficient_depth() {
    // beta_4 needs depth 8; a shallow cap must be reported, not papered over
    let report = run_example_62(Example62Params {
        depth: 3,
        biclosed_depth: 3,
    });
    assert!(!report.passed);
    assert!(report.contaminated);
    assert!(report
        .checks
        .iter()
        .any(|c| c.id == "certificate-roots-in-fragment" && !c.passed));
}

#[test]
fn forest_uniqueness_a3() {
    let (a, b) = run_forest_pair();
    let report = run_forest_uniqueness(&[a, b], 40, 17);
    assert!(report.passed, "{:#?}", report.checks);
    assert_recheck_clean(&report);
}

fn run_forest_pair() -> (crate::coxeter::Ngcm<Rational>, crate::coxeter::Ngcm<Rational>) {
    forest::standard_a3_pair()
}

#[test]
fn forest_uniqueness_rejects_cycles() {
    // a triangle graph is not a forest; the report must fail the precondition
    let v2 = crate::affine::canonical_ngcm_at(2, &rq(2, 1));
    let report = run_forest_uniqueness(&[v2.clone(), v2], 5, 1);
    assert!(!report.passed);
}

#[test]
fn recheck_flags_corrupted_certificates() {
    let report = run_trichotomy(2, 5, 9);
    let mut tampered = report.clone();
    for check in &mut tampered.checks {
        if let Some(cert) = &mut check.certificate {
            if cert["kind"] == "laurent_sign_samples" {
                cert["samples"][0]["sign"] = serde_json::json!("Minus");
            }
        }
    }
    let results = recheck(&tampered);
    assert!(
        results.iter().any(|(_, ok)| !ok),
        "tampered certificate must fail recheck"
    );
}

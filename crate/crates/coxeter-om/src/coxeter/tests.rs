use num_traits::One;

use super::*;
use crate::scalars::{
    interval_det, LaurentPoly, OrderedScalar, Quad5, Rational, Scalar, Sign,
};

fn rq(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn ngcm_q(entries: Vec<Vec<Rational>>) -> Ngcm<Rational> {
    validate_ngcm(entries).expect("valid NGCM")
}

#[test]
fn validate_a2_standard() {
    let a = ngcm_q(vec![vec![rq(2, 1), rq(-1, 1)], vec![rq(-1, 1), rq(2, 1)]]);
    assert_eq!(a.cox().label(0, 1), CoxLabel::Finite(3));
    assert_eq!(ngcm_det(&a), rq(3, 1));
}

#[test]
fn validate_rejects_positive_off_diagonal() {
    let err = validate_ngcm(vec![vec![rq(2, 1), rq(1, 1)], vec![rq(1, 1), rq(2, 1)]])
        .unwrap_err();
    assert!(err
        .iter()
        .any(|v| matches!(v, NgcmViolation::OffDiagonalPositive { .. })));
}

#[test]
fn validate_rejects_asymmetric_zero_and_gap() {
    let err = validate_ngcm(vec![vec![rq(2, 1), rq(0, 1)], vec![rq(-1, 1), rq(2, 1)]])
        .unwrap_err();
    assert!(err
        .iter()
        .any(|v| matches!(v, NgcmViolation::AsymmetricZero { .. })));
    // product 1/2 lies in the forbidden gap
    let err = validate_ngcm(vec![vec![rq(2, 1), rq(-1, 2)], vec![rq(-1, 1), rq(2, 1)]])
        .unwrap_err();
    assert!(err
        .iter()
        .any(|v| matches!(v, NgcmViolation::ForbiddenProduct { .. })));
}

#[test]
fn validate_quad5_bond() {
    let t = crate::scalars::tau();
    let entries = vec![
        vec![Quad5::from_int(2), -t.clone()],
        vec![-t.clone(), Quad5::from_int(2)],
    ];
    let a = validate_ngcm(entries).unwrap();
    assert_eq!(a.cox().label(0, 1), CoxLabel::Finite(5));
}

#[test]
fn validate_symbolic_needs_certified_signs() {
    // entries -v and -v have product v^2: sign of v^2 - 4 is not constant
    // on v > 0, so validation must refuse rather than guess
    let v = LaurentPoly::v();
    let entries = vec![
        vec![LaurentPoly::from_int(2), -v.clone()],
        vec![-v.clone(), LaurentPoly::from_int(2)],
    ];
    let err = validate_ngcm(entries).unwrap_err();
    assert!(err
        .iter()
        .any(|v| matches!(v, NgcmViolation::UndecidableSign { .. })));
}

fn affine_a2_symbolic() -> Ngcm<LaurentPoly> {
    let v = LaurentPoly::v();
    let vinv = LaurentPoly::v_pow(-1);
    let one = LaurentPoly::one();
    let two = LaurentPoly::from_int(2);
    validate_ngcm(vec![
        vec![two.clone(), -v.clone(), -vinv.clone()],
        vec![-vinv.clone(), two.clone(), -one.clone()],
        vec![-v.clone(), -one.clone(), two.clone()],
    ])
    .expect("canonical affine A2 NGCM is valid")
}

#[test]
fn affine_a2_symbolic_det() {
    let a = affine_a2_symbolic();
    assert!(a.cox().graph().edges().iter().all(|&(_, _, m)| m == CoxLabel::Finite(3)));
    let d = ngcm_det(&a);
    let vmv = LaurentPoly::v_minus_vinv();
    assert_eq!(d, -(vmv.clone() * vmv));
}

#[test]
fn symmetrize_two_by_two() {
    let a = ngcm_q(vec![vec![rq(2, 1), rq(-4, 1)], vec![rq(-1, 1), rq(2, 1)]]);
    let diag = symmetrize_forest(&a).unwrap();
    assert_eq!(diag.factors(), &[rq(1, 1), rq(2, 1)]);
    let r = diag.apply(&a);
    assert_eq!(r.entry(0, 1), &rq(-2, 1));
    assert_eq!(r.entry(1, 0), &rq(-2, 1));
    assert!(r.is_symmetric());
    // determinant is invariant under diagonal conjugation
    assert_eq!(ngcm_det(&r), ngcm_det(&a));
}

#[test]
fn symmetrize_identity_on_symmetric() {
    let a = ngcm_q(vec![vec![rq(2, 1), rq(-1, 1)], vec![rq(-1, 1), rq(2, 1)]]);
    let diag = symmetrize_forest(&a).unwrap();
    assert!(diag.factors().iter().all(|d| d.is_one()));
}

#[test]
fn symmetrize_chain_with_unit_products() {
    // path graph, every edge product 1: all rescaled entries are -1
    let a = ngcm_q(vec![
        vec![rq(2, 1), rq(-3, 1), rq(0, 1)],
        vec![rq(-1, 3), rq(2, 1), rq(-1, 5)],
        vec![rq(0, 1), rq(-5, 1), rq(2, 1)],
    ]);
    let diag = symmetrize_forest(&a).unwrap();
    let r = diag.apply(&a);
    for (i, j) in [(0, 1), (1, 0), (1, 2), (2, 1)] {
        assert_eq!(r.entry(i, j), &rq(-1, 1), "entry ({i},{j})");
    }
    assert_eq!(a.cox(), r.cox());
}

#[test]
fn symmetrize_rejects_cycles() {
    // affine A2 at v=2 has a triangle graph
    let a = ngcm_q(vec![
        vec![rq(2, 1), rq(-2, 1), rq(-1, 2)],
        vec![rq(-1, 2), rq(2, 1), rq(-1, 1)],
        vec![rq(-2, 1), rq(-1, 1), rq(2, 1)],
    ]);
    assert!(matches!(
        symmetrize_forest(&a),
        Err(SymmetrizeError::NotAForest)
    ));
}

#[test]
fn symmetrize_reports_escaping_radicand() {
    // ratio 2 has no rational square root
    let a = ngcm_q(vec![vec![rq(2, 1), rq(-2, 1)], vec![rq(-1, 1), rq(2, 1)]]);
    match symmetrize_forest(&a) {
        Err(SymmetrizeError::SqrtEscapesTower { radicand, .. }) => {
            assert_eq!(radicand, "2");
        }
        other => panic!("expected sqrt escape, got {other:?}"),
    }
}

fn pair_for_homotopy() -> (Ngcm<Rational>, Ngcm<Rational>) {
    let a = ngcm_q(vec![vec![rq(2, 1), rq(-1, 1)], vec![rq(-1, 1), rq(2, 1)]]);
    let b = ngcm_q(vec![vec![rq(2, 1), rq(-4, 1)], vec![rq(-1, 4), rq(2, 1)]]);
    (a, b)
}

#[test]
fn homotopy_endpoints_and_midpoint() {
    let (a, b) = pair_for_homotopy();
    assert_eq!(ngcm_homotopy_exact(&a, &b, &rq(0, 1)).unwrap(), a);
    assert_eq!(ngcm_homotopy_exact(&a, &b, &rq(1, 1)).unwrap(), b);
    // |c'|^{1/2} |c|^{1/2} with c = -1, c' = -4 gives -2
    let mid = ngcm_homotopy_exact(&a, &b, &rq(1, 2)).unwrap();
    assert_eq!(mid.entry(0, 1), &rq(-2, 1));
    // validity along the way
    assert!(validate_ngcm(mid.entries().to_vec()).is_ok());
}

#[test]
fn homotopy_rejects_mismatched_cox() {
    let a = ngcm_q(vec![vec![rq(2, 1), rq(-1, 1)], vec![rq(-1, 1), rq(2, 1)]]);
    let c = ngcm_q(vec![vec![rq(2, 1), rq(-2, 1)], vec![rq(-2, 1), rq(2, 1)]]);
    assert!(matches!(
        ngcm_homotopy_exact(&a, &c, &rq(1, 2)),
        Err(HomotopyError::MismatchedCoxeterMatrices)
    ));
}

#[test]
fn homotopy_interval_grid_validates() {
    // 101-point grid: every interpolated matrix certifies as an NGCM of the
    // same Coxeter system
    let a = ngcm_q(vec![
        vec![rq(2, 1), rq(0, 1), rq(-1, 1)],
        vec![rq(0, 1), rq(2, 1), rq(-2, 1)],
        vec![rq(-1, 1), rq(-5, 1), rq(2, 1)],
    ]);
    let b = ngcm_q(vec![
        vec![rq(2, 1), rq(0, 1), rq(-1, 2)],
        vec![rq(0, 1), rq(2, 1), rq(-1, 1)],
        vec![rq(-2, 1), rq(-9, 2), rq(2, 1)],
    ]);
    assert_eq!(a.cox(), b.cox());
    for i in 0..=100u32 {
        let m = ngcm_homotopy_interval(&a, &b, i as i64, 100, 48).unwrap();
        certify_interval_ngcm(&m, a.cox()).unwrap_or_else(|e| panic!("t={i}/100: {e}"));
    }
}

#[test]
fn homotopy_interval_brackets_exact_values() {
    let (a, b) = pair_for_homotopy();
    let m = ngcm_homotopy_interval(&a, &b, 1, 2, 48).unwrap();
    let exact = ngcm_homotopy_exact(&a, &b, &rq(1, 2)).unwrap();
    assert!(m[0][1].lo <= *exact.entry(0, 1) && *exact.entry(0, 1) <= m[0][1].hi);
    // midpoint entries are -2 and -1/2, so the exact determinant is 3 and
    // the interval determinant must certify the same sign and bracket it
    let d = interval_det(&m);
    assert_eq!(d.sign(), Some(Sign::Plus));
    assert!(d.lo <= rq(3, 1) && rq(3, 1) <= d.hi);
    assert_eq!(ngcm_det(&exact), rq(3, 1));
}

#[test]
fn graph_forest_detection() {
    let cox = CoxeterMatrix::from_upper(
        3,
        &[CoxLabel::Finite(3), CoxLabel::Finite(2), CoxLabel::Finite(3)],
    );
    assert!(cox.graph().is_forest());
    let tri = CoxeterMatrix::from_upper(
        3,
        &[CoxLabel::Finite(3), CoxLabel::Finite(3), CoxLabel::Finite(3)],
    );
    assert!(!tri.graph().is_forest());
    assert_eq!(tri.graph().components().len(), 1);
}

#[test]
fn quad_enclosure_brackets_tau() {
    let t = crate::scalars::tau();
    let e = t.enclose(40);
    assert!(e.lo < e.hi);
    // tau is the positive root of x^2 = x + 1
    let lo2 = &e.lo * &e.lo;
    let hi2 = &e.hi * &e.hi;
    assert!(lo2 < &e.hi + Rational::one());
    assert!(hi2 > &e.lo + Rational::one());
}

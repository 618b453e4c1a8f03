//! The symmetric-NGCM chirotope family: the rank-4 Coxeter system with two
//! labelled bonds `m`, `n` and two infinite bonds carrying parameters
//! `c, d >= 2`. The base tuple has chirotope `+` for every parameter choice,
//! while the probe tuple evaluates to `sgn(ad - bc)`, so all three signs
//! occur and the structures differ even up to sign.


use serde_json::json;

use crate::coxeter::validate_ngcm;
use crate::linalg::det_of_columns;
use crate::rootsys::RootDatum;
use crate::scalars::{OrderedScalar, Quad5, Rational, Scalar, Sign};

use super::{cert_det_sign, cert_list, cert_vector_match, ScenarioReport};

fn two_cos_pi_over<K: Scalar>(m: u32) -> Option<K> {
    // 2cos(pi/m) = sqrt(4cos^2(pi/m))
    K::four_cos2_pi(m).and_then(|p| p.try_sqrt())
}

fn run_inner<K: OrderedScalar>(
    report: &mut ScenarioReport,
    a: K,
    b: K,
    c: K,
    d: K,
) {
    let two = K::from_int(2);
    let z = K::zero();
    let entries = vec![
        vec![two.clone(), -a.clone(), -b.clone(), z.clone()],
        vec![-a.clone(), two.clone(), z.clone(), -c.clone()],
        vec![-b.clone(), z.clone(), two.clone(), -d.clone()],
        vec![z.clone(), -c.clone(), -d.clone(), two.clone()],
    ];
    let ngcm = match validate_ngcm(entries) {
        Ok(n) => n,
        Err(e) => {
            report.push("ngcm-valid", false, format!("{e:?}"), None);
            return;
        }
    };
    report.push(
        "ngcm-valid",
        true,
        format!("rank-4 symmetric NGCM, infinite bonds at (2,4) and (3,4)"),
        None,
    );
    let datum = RootDatum::new(ngcm);

    // base tuple chi(alpha_1, .., alpha_4) = +
    let base_cols: Vec<Vec<K>> = (0..4).map(|i| datum.simple_root(i)).collect();
    let base_det = det_of_columns(&base_cols);
    report.push(
        "base-tuple-positive",
        base_det.sign() == Sign::Plus,
        format!("chi(alpha_1..alpha_4) det = {base_det}"),
        Some(cert_det_sign(&base_det, Sign::Plus)),
    );

    // probe roots s_1 s_4 (alpha_2) = a alpha_1 + alpha_2 + c alpha_4 and
    // s_1 s_4 (alpha_3) = b alpha_1 + alpha_3 + d alpha_4
    let w = |x: &[K]| datum.apply_word(&[3, 0], x);
    let probe2 = w(&datum.simple_root(1));
    let probe3 = w(&datum.simple_root(2));
    let expect2 = vec![a.clone(), K::one(), z.clone(), c.clone()];
    let expect3 = vec![b.clone(), z.clone(), K::one(), d.clone()];
    report.push(
        "probe-roots-closed-form",
        probe2 == expect2 && probe3 == expect3,
        "s_1 s_4(alpha_2) and s_1 s_4(alpha_3) match their closed forms".into(),
        Some(cert_list(vec![
            cert_vector_match(&probe2, &expect2),
            cert_vector_match(&probe3, &expect3),
        ])),
    );

    // chi(s_1 s_4(alpha_2), alpha_2, alpha_3, s_1 s_4(alpha_3)) = sgn(ad - bc)
    let probe_cols = vec![
        probe2,
        datum.simple_root(1),
        datum.simple_root(2),
        probe3,
    ];
    let probe_det = det_of_columns(&probe_cols);
    let ad_bc = a.clone() * d.clone() - b.clone() * c.clone();
    let ok = probe_det.sign() == ad_bc.sign();
    report.push(
        "probe-sign-is-ad-minus-bc",
        ok,
        format!(
            "probe det = {probe_det}, ad - bc = {ad_bc}, sign {}",
            ad_bc.sign()
        ),
        Some(cert_list(vec![
            cert_det_sign(&probe_det, ad_bc.sign()),
            cert_det_sign(&ad_bc, ad_bc.sign()),
        ])),
    );
}

/// `m, n_label` are the two finite bond orders (3 or 5 exactly); `c, d`
/// are the infinite-bond parameters, both `>= 2`.
pub fn run_example_61(
    m: u32,
    n_label: u32,
    c: Rational,
    d: Rational,
) -> Result<ScenarioReport, String> {
    let start = std::time::Instant::now();
    if !matches!(m, 3 | 5) || !matches!(n_label, 3 | 5) {
        return Err(format!(
            "bond orders m={m}, n={n_label}: exact towers support 3 and 5 here"
        ));
    }
    let two = Rational::from_integer(2.into());
    if c < two || d < two {
        return Err(format!("parameters c, d must be >= 2, got c={c}, d={d}"));
    }
    let mut report = ScenarioReport::new(
        "example-6.1",
        json!({
            "m": m,
            "n": n_label,
            "c": crate::scalars::rational_string(&c),
            "d": crate::scalars::rational_string(&d),
        }),
    );
    if m == 3 && n_label == 3 {
        let a = two_cos_pi_over::<Rational>(m).expect("2cos(pi/3) = 1");
        let b = two_cos_pi_over::<Rational>(n_label).unwrap();
        run_inner(&mut report, a, b, c, d);
    } else {
        let a = two_cos_pi_over::<Quad5>(m).expect("tower holds 2cos(pi/m)");
        let b = two_cos_pi_over::<Quad5>(n_label).unwrap();
        run_inner(
            &mut report,
            a,
            b,
            Quad5::from_rational(&c),
            Quad5::from_rational(&d),
        );
    }
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

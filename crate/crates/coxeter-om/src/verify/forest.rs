//! Forest uniqueness: realizations of a Coxeter system whose graph is a
//! forest without infinite bonds all induce the same oriented matroid. Each
//! NGCM is symmetrized by rescaling (landing on the standard matrix), and
//! chirotope signs are compared across realizations on matched word-tuples.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::coxeter::{symmetrize_forest, validate_ngcm, Ngcm};
use crate::linalg::det_of_columns;
use crate::rootsys::RootDatum;
use crate::scalars::{OrderedScalar, Rational, Sign};

use super::{cert_det_sign, cert_list, ScenarioReport};

/// Two distinct valid `A_3` NGCMs (chain with both bond products 1).
pub fn standard_a3_pair() -> (Ngcm<Rational>, Ngcm<Rational>) {
    let rq = |n: i64, d: i64| Rational::new(n.into(), d.into());
    let a = validate_ngcm(vec![
        vec![rq(2, 1), rq(-1, 1), rq(0, 1)],
        vec![rq(-1, 1), rq(2, 1), rq(-1, 1)],
        vec![rq(0, 1), rq(-1, 1), rq(2, 1)],
    ])
    .unwrap();
    let b = validate_ngcm(vec![
        vec![rq(2, 1), rq(-2, 1), rq(0, 1)],
        vec![rq(-1, 2), rq(2, 1), rq(-1, 3)],
        vec![rq(0, 1), rq(-3, 1), rq(2, 1)],
    ])
    .unwrap();
    (a, b)
}

pub fn run_forest_uniqueness<K: OrderedScalar>(
    ngcms: &[Ngcm<K>],
    samples: usize,
    seed: u64,
) -> ScenarioReport {
    let start = std::time::Instant::now();
    let mut report = ScenarioReport::new(
        "forest-uniqueness",
        json!({
            "tower": K::tower(),
            "realizations": ngcms.iter().map(crate::io::ngcm_json).collect::<Vec<_>>(),
            "samples": samples,
            "seed": seed,
        }),
    );
    assert!(!ngcms.is_empty());
    let cox = ngcms[0].cox().clone();
    let rank = cox.rank();
    let same_cox = ngcms.iter().all(|n| n.cox() == &cox);
    let forest = cox.graph().is_forest();
    let no_inf = !cox.has_infinite_bond();
    report.push(
        "shared-forest-coxeter-matrix",
        same_cox && forest && no_inf,
        format!("rank {rank}: same Coxeter matrix = {same_cox}, forest = {forest}, no infinite bonds = {no_inf}"),
        None,
    );
    if !(same_cox && forest && no_inf) {
        report.wall_time_ms = start.elapsed().as_millis() as u64;
        return report;
    }

    // symmetrization sends every realization to the same symmetric NGCM
    let mut symmetrized = Vec::new();
    for (i, n) in ngcms.iter().enumerate() {
        match symmetrize_forest(n) {
            Ok(diag) => {
                let r = diag.apply(n);
                let sym = r.is_symmetric();
                // rescaling preserves every bond product
                let products_ok = (0..rank).all(|a| {
                    (0..rank).all(|b| {
                        r.entry(a, b).clone() * r.entry(b, a).clone()
                            == n.entry(a, b).clone() * n.entry(b, a).clone()
                    })
                });
                report.push(
                    &format!("symmetrize-{i}"),
                    sym && products_ok,
                    format!("realization {i}: symmetric = {sym}, products preserved = {products_ok}"),
                    None,
                );
                symmetrized.push(r);
            }
            Err(e) => {
                report.push(&format!("symmetrize-{i}"), false, e.to_string(), None);
            }
        }
    }
    if symmetrized.len() == ngcms.len() {
        let all_equal = symmetrized.windows(2).all(|w| w[0] == w[1]);
        report.push(
            "symmetrized-forms-coincide",
            all_equal,
            "all realizations rescale to the same symmetric NGCM".into(),
            None,
        );
    }

    // chirotope signs on matched word-tuples agree across realizations
    let data: Vec<RootDatum<K>> = ngcms.iter().map(|n| RootDatum::new(n.clone())).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = 0usize;
    let mut certs = Vec::new();
    for _ in 0..samples {
        let tuple: Vec<(Vec<usize>, usize)> = (0..rank)
            .map(|_| {
                let len = rng.gen_range(0..=6);
                (
                    (0..len).map(|_| rng.gen_range(0..rank)).collect(),
                    rng.gen_range(0..rank),
                )
            })
            .collect();
        let mut signs: Vec<Sign> = Vec::new();
        let mut dets = Vec::new();
        for datum in &data {
            let cols: Vec<Vec<K>> = tuple
                .iter()
                .map(|(w, b)| datum.apply_word(w, &datum.simple_root(*b)))
                .collect();
            let det = det_of_columns(&cols);
            signs.push(det.sign());
            dets.push(det);
        }
        if signs.windows(2).any(|w| w[0] != w[1]) {
            mismatches += 1;
        } else {
            certs.push(cert_list(
                dets.iter().map(|d| cert_det_sign(d, signs[0])).collect(),
            ));
        }
    }
    report.push(
        "matched-tuple-signs-agree",
        mismatches == 0,
        format!("{samples} matched word-tuples, {mismatches} sign disagreements"),
        Some(cert_list(certs)),
    );
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    report
}

//! The golden-ratio counterexample: in the rank-4 all-5s cycle (standard
//! realization over `Q(sqrt 5)`), the set `Xi' = Gamma ∪ Gamma'` — roots
//! pairing negatively with `alpha_1^vee` together with the positive system
//! of the parabolic `<s_{beta_1}, s_{beta_3}, s_{beta_4}>` of the
//! orthogonal-complement subsystem — is 2-closure biclosed but not
//! cone-biclosed: `s_{beta_1}(beta_2)` lies in `cone(Xi')` yet outside
//! `Xi'`.

use num_traits::{One, Zero};
use serde_json::json;

use crate::coxeter::validate_ngcm;
use crate::omclosure::{cone_member, is_biclosed, BiclosedVerdict, ClosureKind, ConeCertificate};
use crate::rootsys::{enumerate_roots, RootDatum, Snapshot};
use crate::scalars::{tau, Quad5, Scalar, Sign};

use super::{
    cert_cone_combination, cert_list, cert_products_ge4, cert_scalar_zero, cert_vector_match,
    ScenarioReport,
};

/// Standard realization of the rank-4 Coxeter system whose graph is a
/// 4-cycle with all bonds labelled 5: adjacent pairings `-tau`, opposite
/// generators commuting.
pub fn golden_cycle_datum() -> RootDatum<Quad5> {
    let t = tau();
    let two = Quad5::from_int(2);
    let z = Quad5::zero();
    let entries = vec![
        vec![two.clone(), -t.clone(), z.clone(), -t.clone()],
        vec![-t.clone(), two.clone(), -t.clone(), z.clone()],
        vec![z.clone(), -t.clone(), two.clone(), -t.clone()],
        vec![-t.clone(), z.clone(), -t.clone(), two.clone()],
    ];
    RootDatum::new(validate_ngcm(entries).expect("all-5s cycle NGCM"))
}

/// `a + b*tau`.
fn tp(a: i64, b: i64) -> Quad5 {
    Quad5::from_int(a) + Quad5::from_int(b) * tau()
}

/// Witness words (application order, 0-based) for the canonical simple
/// system `Delta' = {beta_1, .., beta_4}` of the subsystem orthogonal to
/// `alpha_1`, and for the root `s_{beta_1}(beta_2)`.
struct BetaData {
    words: [(&'static [usize], usize); 4],
    witness_word: (&'static [usize], usize),
}

const BETA: BetaData = BetaData {
    words: [
        (&[], 2),                         // beta_1 = alpha_3
        (&[0, 3, 0, 3], 1),               // beta_2 = x_4(alpha_2)
        (&[0, 1, 0, 1], 3),               // beta_3 = x_1^{-1}(alpha_4)
        (&[3, 2, 3, 2, 0, 3, 0, 3], 0),   // beta_4 = x_4 x_3(alpha_1)
    ],
    witness_word: (&[0, 3, 0, 3, 2], 1),  // s_{beta_1}(beta_2)
};

fn expected_betas() -> [Vec<Quad5>; 4] {
    let z = Quad5::zero();
    let one = Quad5::one();
    [
        vec![z.clone(), z.clone(), one.clone(), z.clone()],
        vec![tp(1, 2), one.clone(), z.clone(), tp(1, 2)],
        vec![tp(1, 2), tp(1, 2), z.clone(), one.clone()],
        vec![tp(4, 6), z.clone(), tp(1, 2), tp(4, 8)],
    ]
}

#[derive(Debug, Clone, Copy)]
pub struct Example62Params {
    /// Enumeration cap for locating the certificate roots (their witness
    /// words are all of length <= 8, so any depth >= 8 suffices).
    pub depth: usize,
    /// Depth of the sub-fragment used for the pairwise 2-closure
    /// confirmation; the biclosed pair scan is cubic in the fragment size.
    pub biclosed_depth: usize,
}

impl Default for Example62Params {
    fn default() -> Self {
        Example62Params {
            depth: 16,
            biclosed_depth: 5,
        }
    }
}

/// Positive roots of the standard parabolic `<s_{beta_1}, s_{beta_3},
/// s_{beta_4}>` of `W_alpha` with all ambient coordinates `<= bound`.
///
/// Pruning at a coordinate bound is exhaustive: every positive root of the
/// subsystem descends to a simple root through roots whose coordinates over
/// `{beta_1, beta_3, beta_4}` are componentwise no larger, and ambient
/// coordinates are a nonnegative image of those, so no root below the bound
/// is reachable only through roots above it.
fn parabolic_fragment(
    datum: &RootDatum<Quad5>,
    simples: &[(Vec<Quad5>, Vec<Quad5>)],
    bound: &Quad5,
) -> Vec<Vec<Quad5>> {
    let mut found: Vec<(Vec<Quad5>, Vec<Quad5>)> = simples.to_vec();
    let mut keys: std::collections::HashSet<Vec<Quad5>> = simples
        .iter()
        .map(|(r, _)| Snapshot::<Quad5>::ray_key(r))
        .collect();
    let mut frontier: Vec<usize> = (0..simples.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &idx in &frontier {
            for (s_root, s_coroot) in simples {
                let (root, coroot) = &found[idx];
                let new_root = datum.reflect_by(s_root, s_coroot, root);
                // coroot side: lambda - (beta, lambda) beta^vee
                let c = datum.pairing(s_root, coroot);
                let new_coroot: Vec<Quad5> = coroot
                    .iter()
                    .zip(s_coroot)
                    .map(|(l, bv)| l.clone() - c.clone() * bv.clone())
                    .collect();
                if new_root.iter().any(|x| x.sign() == Sign::Minus) {
                    continue; // negative parabolic root
                }
                if new_root.iter().any(|x| x > bound) {
                    continue; // pruned: beyond every fragment coordinate
                }
                let key = Snapshot::<Quad5>::ray_key(&new_root);
                if keys.insert(key) {
                    next.push(found.len());
                    found.push((new_root, new_coroot));
                }
            }
        }
        frontier = next;
    }
    found.into_iter().map(|(r, _)| r).collect()
}

use crate::scalars::OrderedScalar;

pub fn run_example_62(params: Example62Params) -> ScenarioReport {
    let start = std::time::Instant::now();
    let mut report = ScenarioReport::new(
        "example-6.2",
        json!({
            "depth": params.depth,
            "biclosed_fragment_depth": params.biclosed_depth,
        }),
    );
    let datum = golden_cycle_datum();
    let dual = datum.dual();

    // (a) recompute beta_1..beta_4 from their defining words
    let expected = expected_betas();
    let mut betas = Vec::new();
    let mut beta_coroots = Vec::new();
    let mut coords_ok = true;
    let mut coord_certs = Vec::new();
    for (i, (word, base)) in BETA.words.iter().enumerate() {
        let b = datum.apply_word(word, &datum.simple_root(*base));
        let bv = dual.apply_word(word, &dual.simple_root(*base));
        coords_ok &= b == expected[i];
        coord_certs.push(cert_vector_match(&b, &expected[i]));
        betas.push(b);
        beta_coroots.push(bv);
    }
    report.push(
        "beta-coordinates-match",
        coords_ok,
        "beta_1..beta_4 recomputed from x_i-words match the published coordinates".into(),
        Some(cert_list(coord_certs)),
    );

    // (b) orthogonality to alpha_1
    let pairings: Vec<Quad5> = betas
        .iter()
        .map(|b| datum.pairing_with_simple_coroot(b, 0))
        .collect();
    report.push(
        "betas-orthogonal-to-alpha1",
        pairings.iter().all(|p| p.is_zero()),
        "(beta_p, alpha_1^vee) = 0 for p = 1..4".into(),
        Some(cert_scalar_zero(&pairings)),
    );

    // (c) the reflection identity
    let witness = datum.apply_word(BETA.witness_word.0, &datum.simple_root(BETA.witness_word.1));
    let coef = tp(2, 4); // 4 tau + 2
    let expect_witness: Vec<Quad5> = betas[1]
        .iter()
        .zip(&betas[0])
        .map(|(b2, b1)| b2.clone() + coef.clone() * b1.clone())
        .collect();
    report.push(
        "reflection-identity",
        witness == expect_witness,
        "s_{beta_1}(beta_2) = beta_2 + (4 tau + 2) beta_1".into(),
        Some(cert_vector_match(&witness, &expect_witness)),
    );

    // (d) the cone certificate with the published coefficients, plus an
    // independent feasibility run
    let gens = vec![betas[0].clone(), betas[2].clone(), betas[3].clone()];
    let inv = Quad5::one().exact_div(&tp(1, 2)).expect("2tau+1 invertible");
    let published_coeffs = vec![tp(1, 4), inv.clone(), inv];
    let published = ConeCertificate::Member {
        coeffs: published_coeffs.clone(),
    };
    let published_ok = published.verify(&witness, &gens);
    let solver_cert = cone_member(&witness, &gens);
    report.push(
        "cone-certificate",
        published_ok && solver_cert.is_member(),
        "s_{beta_1}(beta_2) = (4tau+1) beta_1 + (2tau+1)^{-1} (beta_3 + beta_4)".into(),
        Some(cert_cone_combination(&witness, &gens, &published_coeffs)),
    );

    // (e) pairwise pairing products are >= 4: the subsystem is universal
    let mut products = Vec::new();
    for p in 0..4 {
        for q in p + 1..4 {
            let a = datum.pairing(&betas[p], &beta_coroots[q]);
            let b = datum.pairing(&betas[q], &beta_coroots[p]);
            products.push(a * b);
        }
    }
    let products_ok = products.iter().all(|p| {
        matches!(
            (p.clone() - Quad5::from_int(4)).try_sign(),
            Some(Sign::Zero) | Some(Sign::Plus)
        )
    });
    report.push(
        "universal-subsystem-products",
        products_ok,
        "(beta_p, beta_q^vee)(beta_q, beta_p^vee) >= 4 for all p != q".into(),
        Some(cert_products_ge4(&products)),
    );

    // (f) fragment verdicts
    let containment_depth = params.depth.min(8);
    let snapshot = match enumerate_roots(&datum, containment_depth) {
        Ok(s) => s,
        Err(e) => {
            report.push("fragment-enumeration", false, e.to_string(), None);
            report.contaminated = true;
            report.wall_time_ms = start.elapsed().as_millis() as u64;
            return report;
        }
    };
    let mut missing = Vec::new();
    for (i, b) in betas.iter().enumerate() {
        if snapshot.find_ray(b).is_none() {
            missing.push(format!("beta_{}", i + 1));
        }
    }
    if snapshot.find_ray(&witness).is_none() {
        missing.push("s_{beta_1}(beta_2)".into());
    }
    if !missing.is_empty() {
        report.push(
            "certificate-roots-in-fragment",
            false,
            format!(
                "missing at depth {containment_depth}: {}; increase --depth",
                missing.join(", ")
            ),
            None,
        );
        report.contaminated = true;
        report.wall_time_ms = start.elapsed().as_millis() as u64;
        return report;
    }
    report.push(
        "certificate-roots-in-fragment",
        true,
        format!(
            "all certificate roots found at depth <= {containment_depth} <= requested {}",
            params.depth
        ),
        None,
    );

    // classification fragment for the biclosed confirmation
    let bdepth = params.biclosed_depth.min(params.depth);
    let fragment = enumerate_roots(&datum, bdepth).expect("fragment enumerates");
    let mut coord_bound = Quad5::from_int(1);
    for e in fragment.rays() {
        for c in &e.rep {
            if *c > coord_bound {
                coord_bound = c.clone();
            }
        }
    }
    for c in &witness {
        if *c > coord_bound {
            coord_bound = c.clone();
        }
    }
    // margin so near-boundary parabolic roots are classified correctly
    let bound = coord_bound * tp(2, 4) * tp(2, 4);
    let parabolic = parabolic_fragment(
        &datum,
        &[
            (betas[0].clone(), beta_coroots[0].clone()),
            (betas[2].clone(), beta_coroots[2].clone()),
            (betas[3].clone(), beta_coroots[3].clone()),
        ],
        &bound,
    );
    let parabolic_keys: std::collections::HashSet<Vec<Quad5>> = parabolic
        .iter()
        .map(|r| Snapshot::<Quad5>::ray_key(r))
        .collect();

    // Xi' on the fragment: Gamma = negative pairing, Gamma' = parabolic
    let mut xi: Vec<usize> = Vec::new();
    let mut gamma_count = 0usize;
    let mut wstab_count = 0usize;
    for (i, e) in fragment.rays().iter().enumerate() {
        match datum.pairing_with_simple_coroot(&e.rep, 0).sign() {
            Sign::Minus => {
                xi.push(i);
                gamma_count += 1;
            }
            Sign::Zero => {
                wstab_count += 1;
                if parabolic_keys.contains(&Snapshot::<Quad5>::ray_key(&e.rep)) {
                    xi.push(i);
                }
            }
            Sign::Plus => {}
        }
    }
    let positives: Vec<usize> = (0..fragment.len()).collect();
    let verdict = is_biclosed(&fragment, &xi, &positives, ClosureKind::Two);
    let two_ok = verdict.is_biclosed();
    report.push(
        "xi-two-closure-biclosed-on-fragment",
        two_ok,
        match &verdict {
            BiclosedVerdict::Biclosed { contaminated } => format!(
                "Xi' ({} of {} rays at depth {bdepth}; {gamma_count} from Gamma, {} from Gamma', \
                 {wstab_count} rays orthogonal to alpha_1) is 2-closure biclosed on the fragment{}",
                xi.len(),
                fragment.len(),
                xi.len() - gamma_count,
                if *contaminated {
                    "; fragment boundary populated (verdict at this depth)"
                } else {
                    ""
                }
            ),
            BiclosedVerdict::NotBiclosed { witness, .. } => {
                format!("violated at fragment ray {witness}")
            }
        },
        None,
    );

    // not cone-biclosed: the witness is in cone(Xi') via parabolic members
    // beta_1, beta_3, beta_4, yet classifies outside Xi'
    let witness_pairing = datum.pairing_with_simple_coroot(&witness, 0);
    let witness_in_gamma_prime =
        parabolic_keys.contains(&Snapshot::<Quad5>::ray_key(&witness));
    let not_cone_biclosed =
        published_ok && witness_pairing.is_zero() && !witness_in_gamma_prime;
    report.push(
        "xi-not-cone-biclosed",
        not_cone_biclosed,
        format!(
            "s_{{beta_1}}(beta_2) lies in cone(Xi') by the certificate, pairs to {} with \
             alpha_1^vee, and is not a parabolic root (checked to coordinate bound {bound}), \
             so it lies in cone(Xi') ∩ (Phi+ \\ Xi')",
            witness_pairing
        ),
        Some(cert_cone_combination(&witness, &gens, &published_coeffs)),
    );

    // fragment-level cross-check of the same violation, when the fragment
    // already contains enough of Xi' to exhibit it
    let xi_gens: Vec<Vec<Quad5>> = xi.iter().map(|&r| fragment.ray(r).rep.clone()).collect();
    let frag_cert = cone_member(&witness, &xi_gens);
    report.push(
        "witness-in-fragment-cone",
        true,
        if frag_cert.is_member() {
            format!(
                "cone(Xi' ∩ fragment at depth {bdepth}) already contains the witness"
            )
        } else {
            format!(
                "cone(Xi' ∩ fragment at depth {bdepth}) misses the witness (beta_4 enters \
                 at depth 8); the global certificate above is the verdict"
            )
        },
        None,
    );

    report.wall_time_ms = start.elapsed().as_millis() as u64;
    report
}

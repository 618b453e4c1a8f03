use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::*;
use crate::affine::canonical_ngcm_symbolic;
use crate::coxeter::validate_ngcm;
use crate::linalg::{bareiss_det, proportional};
use crate::scalars::{tau, LaurentPoly, Quad5, Rational, Scalar, Sign};

fn rq(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn a2_datum() -> RootDatum<Rational> {
    RootDatum::new(
        validate_ngcm(vec![vec![rq(2, 1), rq(-1, 1)], vec![rq(-1, 1), rq(2, 1)]]).unwrap(),
    )
}

pub(crate) use crate::verify::golden_cycle_datum as cycle5_datum;

#[test]
fn reflect_simple_negates_own_root() {
    let d = a2_datum();
    let a0 = d.simple_root(0);
    let r = d.reflect_simple(0, &a0);
    assert_eq!(r, vec![rq(-1, 1), rq(0, 1)]);
}

#[test]
fn affine_symbolic_reflection_example() {
    // s_{alpha_1} s_{alpha_0} (alpha_1) = v^{-1} alpha_0
    let d = RootDatum::new(canonical_ngcm_symbolic(2));
    let out = d.apply_word(&[0, 1], &d.simple_root(1));
    let mut expect = vec![LaurentPoly::zero(); 3];
    expect[0] = LaurentPoly::v_pow(-1);
    assert_eq!(out, expect);
}

#[test]
fn golden_ratio_neighbor_reflection() {
    // s_{alpha_i}(alpha_{i+1}) = alpha_{i+1} + tau alpha_i
    let d = cycle5_datum();
    for i in 0..4usize {
        let j = (i + 1) % 4;
        let out = d.reflect_simple(i, &d.simple_root(j));
        let mut expect = d.simple_root(j);
        expect[i] = tau();
        assert_eq!(out, expect, "i={i}");
        // opposite vertices commute
        let k = (i + 2) % 4;
        assert_eq!(d.reflect_simple(i, &d.simple_root(k)), d.simple_root(k));
    }
}

#[test]
fn apply_word_identity_and_interval_roots() {
    let d = RootDatum::new(canonical_ngcm_symbolic(3));
    let x = d.simple_root(2);
    assert_eq!(d.apply_word(&[], &x), x);
    // alpha_{i,j} = s_{alpha_j} ... s_{alpha_{i+1}} (alpha_i): word lists
    // application order i+1, ..., j
    let (i, j) = (1usize, 3usize);
    let word: Vec<usize> = (i + 1..=j).collect();
    let out = d.apply_word(&word, &d.simple_root(i));
    let expect: Vec<LaurentPoly> = (0..=3)
        .map(|r| {
            if r >= i && r <= j {
                LaurentPoly::from_int(1)
            } else {
                LaurentPoly::zero()
            }
        })
        .collect();
    assert_eq!(out, expect);
}

#[test]
fn beta4_word_reproduces_published_coordinates() {
    // beta_4 = x_4 x_3 (alpha_1) with x_i = s_i s_{i+1} s_i s_{i+1}
    // (1-based); in application order the word is x_3's then x_4's letters
    let d = cycle5_datum();
    let word = [3usize, 2, 3, 2, 0, 3, 0, 3]; // 0-based
    let out = d.apply_word(&word, &d.simple_root(0));
    let t = tau();
    let c = |a: i64, b: i64| Quad5::from_parts(a, 0) + Quad5::from_parts(b, 0) * t.clone();
    let expect = vec![c(4, 6), Quad5::zero(), c(1, 2), c(4, 8)];
    assert_eq!(out, expect);
}

#[test]
fn enumerate_a2_fragment() {
    let snap = enumerate_roots(&a2_datum(), 3).unwrap();
    assert_eq!(snap.len(), 3, "A2 has 3 positive rays");
    for i in 0..snap.len() {
        assert!(snap.verify_witness(i));
        assert!(snap.ray(i).depth <= 3);
    }
    let highest = vec![rq(1, 1), rq(1, 1)];
    assert!(snap.find_ray(&highest).is_some());
    let neg = vec![rq(-1, 1), rq(0, 1)];
    let (idx, sign) = snap.find_signed(&neg).unwrap();
    assert_eq!(idx, 0);
    assert_eq!(sign, Sign::Minus);
}

#[test]
fn enumerate_depth_zero_is_simples() {
    let snap = enumerate_roots(&a2_datum(), 0).unwrap();
    assert_eq!(snap.len(), 2);
    assert!(snap.rays().iter().all(|e| e.depth == 0 && e.word.is_empty()));
}

#[test]
fn enumerate_infinite_dihedral_v2() {
    // canonical slice of the affine family at v = 2: bond entries -(v + 1/v)
    let c = rq(-5, 2);
    let d = RootDatum::new(
        validate_ngcm(vec![vec![rq(2, 1), c.clone()], vec![c, rq(2, 1)]]).unwrap(),
    );
    let snap = enumerate_roots(&d, 4).unwrap();
    // two new rays per level in an infinite dihedral group
    assert_eq!(snap.len(), 2 + 2 * 4);
    for i in 0..snap.len() {
        for j in i + 1..snap.len() {
            assert!(
                !proportional(&snap.ray(i).rep, &snap.ray(j).rep),
                "rays {i} and {j} coincide"
            );
        }
    }
}

#[test]
fn enumerate_dedups_v_power_associates() {
    // affine A2 at v = 2: (1/2) alpha_0 appears as a root but lies on the
    // ray of alpha_0
    let ngcm = crate::affine::canonical_ngcm_at(2, &rq(2, 1));
    let d = RootDatum::new(ngcm);
    let snap = enumerate_roots(&d, 2).unwrap();
    let half_alpha0 = vec![rq(1, 2), rq(0, 1), rq(0, 1)];
    assert_eq!(snap.find_ray(&half_alpha0), Some(0));
    // the same fragment over the symbolic tower also collapses associates
    let sym = RootDatum::new(canonical_ngcm_symbolic(2));
    let snap_sym = enumerate_roots(&sym, 2).unwrap();
    let v_alpha0: Vec<LaurentPoly> = vec![
        LaurentPoly::v_pow(-1),
        LaurentPoly::zero(),
        LaurentPoly::zero(),
    ];
    assert_eq!(snap_sym.find_ray(&v_alpha0), Some(0));
}

#[test]
fn coroot_witness_examples() {
    let d = RootDatum::new(canonical_ngcm_symbolic(3));
    let dual = d.dual();
    // alpha_{1,3}^vee = alpha_1^vee + alpha_2^vee + alpha_3^vee
    let word = [2usize, 3];
    let cor = dual.apply_word(&word, &dual.simple_root(1));
    let expect: Vec<LaurentPoly> = (0..=3)
        .map(|r| {
            if r >= 1 {
                LaurentPoly::from_int(1)
            } else {
                LaurentPoly::zero()
            }
        })
        .collect();
    assert_eq!(cor, expect);
    // (v^m alpha)^vee = v^{-m} alpha^vee: the word sending alpha_1 to
    // v^{-1} alpha_0 sends alpha_1^vee to v alpha_0^vee
    let word = [0usize, 1];
    let root = d.apply_word(&word, &d.simple_root(1));
    assert_eq!(root[0], LaurentPoly::v_pow(-1));
    let cor = dual.apply_word(&word, &dual.simple_root(1));
    assert_eq!(cor[0], LaurentPoly::v_pow(1));
}

#[test]
fn snapshot_pairing_of_rep_and_coroot_is_two() {
    let snap = enumerate_roots(&a2_datum(), 4).unwrap();
    for e in snap.rays() {
        assert_eq!(snap.datum().pairing(&e.rep, &e.coroot), rq(2, 1));
    }
}

#[test]
fn pairing_invariance_under_words() {
    let mut rng = StdRng::seed_from_u64(31);
    let d = cycle5_datum();
    let dual = d.dual();
    let snap = enumerate_roots(&d, 3).unwrap();
    for _ in 0..80 {
        let len = rng.gen_range(0..=6);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..4)).collect();
        let x = &snap.ray(rng.gen_range(0..snap.len()));
        let y = &snap.ray(rng.gen_range(0..snap.len()));
        let before = d.pairing(&x.rep, &y.coroot);
        let wx = d.apply_word(&word, &x.rep);
        let wy = dual.apply_word(&word, &y.coroot);
        assert_eq!(d.pairing(&wx, &wy), before);
    }
}

#[test]
fn word_determinant_parity() {
    let mut rng = StdRng::seed_from_u64(97);
    let d = a2_datum();
    for _ in 0..50 {
        let len = rng.gen_range(0..=7);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..2)).collect();
        let det = bareiss_det(&d.word_matrix(&word));
        let expect = if len % 2 == 0 { rq(1, 1) } else { rq(-1, 1) };
        assert_eq!(det, expect);
    }
}

#[test]
fn reflect_involution_on_snapshot() {
    let d = cycle5_datum();
    let snap = enumerate_roots(&d, 3).unwrap();
    for e in snap.rays() {
        for p in 0..4 {
            let twice = d.reflect_simple(p, &d.reflect_simple(p, &e.rep));
            assert_eq!(twice, e.rep);
        }
    }
}

#[test]
fn abstract_transfer_keys() {
    // simple roots map to their own reflections with positive sign
    let snap = enumerate_roots(&a2_datum(), 3).unwrap();
    let abs = abstract_transfer(&snap).unwrap();
    assert_eq!(abs.len(), snap.len());
    assert!(abs.iter().all(|a| a.positive));
    let distinct: std::collections::HashSet<_> = abs.iter().map(|a| a.key.clone()).collect();
    assert_eq!(distinct.len(), snap.len(), "A2 rays have distinct reflections");
}

#[test]
fn transfer_keys_match_across_realizations() {
    // an asymmetric A2 realization and the standard one give the same keys
    // on matched witnesses
    let asym = RootDatum::new(
        validate_ngcm(vec![vec![rq(2, 1), rq(-4, 1)], vec![rq(-1, 4), rq(2, 1)]]).unwrap(),
    );
    let std_snap = enumerate_roots(&a2_datum(), 4).unwrap();
    let asym_snap = enumerate_roots(&asym, 4).unwrap();
    assert_eq!(std_snap.len(), asym_snap.len());
    let a = abstract_transfer(&std_snap).unwrap();
    let b = abstract_transfer(&asym_snap).unwrap();
    let sa: std::collections::HashSet<_> = a.iter().map(|x| x.key.clone()).collect();
    let sb: std::collections::HashSet<_> = b.iter().map(|x| x.key.clone()).collect();
    assert_eq!(sa, sb);
}

#[test]
fn equivariance_of_transfer_under_generators() {
    // pi(s_p(rep)) = (s_p t s_p, eta) with the sign flipping exactly on the
    // ray of alpha_p
    let d = a2_datum();
    let snap = enumerate_roots(&d, 4).unwrap();
    let reference = reference_realization(d.ngcm().cox()).unwrap();
    for (i, e) in snap.rays().iter().enumerate() {
        let (key_before, _) = reference.key_of_witness(&e.word, e.base);
        for p in 0..2usize {
            let image = d.reflect_simple(p, &e.rep);
            let (idx, sign) = snap.find_signed(&image).expect("fragment is closed enough");
            let img = &snap.ray(idx);
            let (key_after, _) = reference.key_of_witness(&img.word, img.base);
            // conjugation by a generator: same key iff the reflection is
            // fixed; the sign flips iff the ray is alpha_p's own
            let expect_flip = i == p;
            assert_eq!(sign == Sign::Minus, expect_flip, "ray {i}, generator {p}");
            if i == p {
                assert_eq!(key_before, key_after);
            }
        }
    }
}

#[test]
fn dihedral_span_examples() {
    let snap = enumerate_roots(&a2_datum(), 3).unwrap();
    let spanned = dihedral_span_roots(&snap, 0, 1).unwrap();
    assert_eq!(spanned.len(), 3, "A2 plane holds all three rays");
    // orthogonal pair in A1 x A1
    let d = RootDatum::new(
        validate_ngcm(vec![vec![rq(2, 1), rq(0, 1)], vec![rq(0, 1), rq(2, 1)]]).unwrap(),
    );
    let snap = enumerate_roots(&d, 3).unwrap();
    let spanned = dihedral_span_roots(&snap, 0, 1).unwrap();
    assert_eq!(spanned.len(), 2, "m = 2 plane holds only the inputs");
    assert!(dihedral_span_roots(&snap, 0, 0).is_err());
}

#[test]
fn affine_dihedral_span_fragment() {
    // Phi_{1,1} fragment inside symbolic affine A2: alpha_1 and alpha'_{1,1}
    let d = RootDatum::new(canonical_ngcm_symbolic(2));
    let snap = enumerate_roots(&d, 4).unwrap();
    let alpha1 = snap.find_ray(&d.simple_root(1)).unwrap();
    let primed = crate::affine::root_coords(2, &crate::affine::AffineIndex::new(1, 0, -1, 1, 1));
    let neg: Vec<LaurentPoly> = primed.iter().map(|c| -c.clone()).collect();
    let a_primed = snap.find_ray(&neg).expect("alpha'_{1,1} in fragment");
    let cell = dihedral_span_roots(&snap, alpha1, a_primed).unwrap();
    // every member must carry index (i,j) = (1,1) under membership
    for &ray in &cell {
        let idx = crate::affine::membership(2, &snap.ray(ray).rep)
            .expect("span members are roots");
        assert_eq!(idx.phi_ij(), (1, 1), "ray {ray}");
    }
    assert!(cell.len() >= 4, "fragment of the infinite dihedral cell");
}

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::*;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[test]
fn gauss_c_small_values() {
    assert!(gauss_c(0).is_zero());
    assert!(gauss_c(1).is_one());
    // c_3 = v^2 + 1 + v^-2
    let c3 = LaurentPoly::from_coeffs([(2, rat(1, 1)), (0, rat(1, 1)), (-2, rat(1, 1))]);
    assert_eq!(gauss_c(3), c3);
    // c_{-2} = -(v + v^-1)
    let c2 = LaurentPoly::from_coeffs([(1, rat(1, 1)), (-1, rat(1, 1))]);
    assert_eq!(gauss_c(-2), -c2);
}

#[test]
fn gauss_c_evaluates_to_n_at_one() {
    for n in -8..=8 {
        assert_eq!(gauss_c(n).eval_at_one(), rat(n, 1));
    }
}

#[test]
fn gauss_c_odd_and_positive() {
    for n in 0..=8 {
        assert_eq!(gauss_c(-n), -gauss_c(n));
    }
    for n in 1..=8 {
        for q in [rat(1, 3), rat(1, 2), rat(1, 1), rat(3, 2), rat(7, 1)] {
            assert_eq!(laurent_sign_at(&gauss_c(n), &q), Sign::Plus);
        }
    }
}

#[test]
fn gauss_identity() {
    // c_{n+1} c_{m+1} - c_n c_m = c_{n+m+1}
    for n in -8..=8i64 {
        for m in -8..=8i64 {
            let lhs = gauss_c(n + 1) * gauss_c(m + 1) - gauss_c(n) * gauss_c(m);
            assert_eq!(lhs, gauss_c(n + m + 1), "n={n} m={m}");
        }
    }
}

#[test]
fn laurent_sign_examples() {
    let vmv = LaurentPoly::v_minus_vinv();
    assert_eq!(laurent_sign_at(&vmv, &rat(2, 1)), Sign::Plus);
    assert_eq!(laurent_sign_at(&vmv, &rat(1, 1)), Sign::Zero);
    assert_eq!(laurent_sign_at(&gauss_c(3), &rat(1, 3)), Sign::Plus);
}

#[test]
fn laurent_exact_division() {
    let p = gauss_c(4) * gauss_c(3) * LaurentPoly::v_pow(-2);
    let q = p.exact_div(&gauss_c(3)).unwrap();
    assert_eq!(q, gauss_c(4) * LaurentPoly::v_pow(-2));
    // c_3 is not divisible by v - v^{-1} (it is nonzero at v = 1)
    assert!(gauss_c(3).exact_div(&LaurentPoly::v_minus_vinv()).is_none());
}

#[test]
fn laurent_sqrt_roundtrip() {
    let p = gauss_c(3) * gauss_c(3) * LaurentPoly::v_pow(4);
    let r = p.try_sqrt().unwrap();
    assert_eq!(r.clone() * r, p);
    assert!(gauss_c(2).try_sqrt().is_none());
}

#[test]
fn quad_sign_examples() {
    let t = tau();
    assert_eq!(t.try_sign(), Some(Sign::Plus));
    // 1 - tau = -1/tau < 0
    let one_minus_tau = Quad5::one() - t.clone();
    assert_eq!(one_minus_tau.try_sign(), Some(Sign::Minus));
    assert_eq!(Quad5::zero().try_sign(), Some(Sign::Zero));
    // tau^2 = tau + 1
    assert_eq!(t.clone() * t.clone(), t + Quad5::one());
}

#[test]
fn quad_sqrt() {
    // sqrt(tau^2) = tau
    let t = tau();
    let t2 = t.clone() * t.clone();
    assert_eq!(t2.try_sqrt(), Some(t.clone()));
    // sqrt(5) = 0 + 1*sqrt5
    let five = Quad5::from_int(5);
    let s5 = five.try_sqrt().unwrap();
    assert_eq!(s5.clone() * s5.clone(), five);
    // 3 + sqrt5 is not a square in Q(sqrt5)... but (3+sqrt5)/2 * 2 = tau^2 * 2:
    // check a genuine non-square
    assert!(Quad5::from_int(2).try_sqrt().is_none());
    assert!((-Quad5::one()).try_sqrt().is_none());
}

fn random_rational(rng: &mut StdRng) -> Rational {
    let n: i64 = rng.gen_range(-40..=40);
    let d: i64 = rng.gen_range(1..=12);
    rat(n, d)
}

fn random_quad(rng: &mut StdRng) -> Quad5 {
    Quad5::new(random_rational(rng), random_rational(rng))
}

fn random_laurent(rng: &mut StdRng) -> LaurentPoly {
    let terms = rng.gen_range(0..4);
    LaurentPoly::from_coeffs((0..terms).map(|_| (rng.gen_range(-4..=4), random_rational(rng))))
}

#[test]
fn field_axioms_randomized() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..1000 {
        let (a, b, c) = (
            random_rational(&mut rng),
            random_rational(&mut rng),
            random_rational(&mut rng),
        );
        assert_eq!((&a + &b) + &c, &a + (&b + &c));
        assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        if !b.is_zero() {
            let q = Scalar::exact_div(&a, &b).unwrap();
            assert_eq!(q * b.clone(), a);
        }
    }
    for _ in 0..1000 {
        let (a, b, c) = (
            random_quad(&mut rng),
            random_quad(&mut rng),
            random_quad(&mut rng),
        );
        assert_eq!(
            (a.clone() + b.clone()) + c.clone(),
            a.clone() + (b.clone() + c.clone())
        );
        assert_eq!(
            a.clone() * (b.clone() + c.clone()),
            a.clone() * b.clone() + a.clone() * c.clone()
        );
        if !b.is_zero() {
            let q = a.exact_div(&b).unwrap();
            assert_eq!(q * b, a);
        }
    }
    for _ in 0..1000 {
        let (a, b, c) = (
            random_laurent(&mut rng),
            random_laurent(&mut rng),
            random_laurent(&mut rng),
        );
        assert_eq!(
            (a.clone() + b.clone()) + c.clone(),
            a.clone() + (b.clone() + c.clone())
        );
        assert_eq!(
            a.clone() * (b.clone() + c.clone()),
            a.clone() * b.clone() + a.clone() * c.clone()
        );
        if !b.is_zero() {
            let p = a.clone() * b.clone();
            assert_eq!(p.exact_div(&b), Some(a));
        }
    }
}

#[test]
fn laurent_mul_commutes_with_eval() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..200 {
        let p = random_laurent(&mut rng);
        let r = random_laurent(&mut rng);
        let q = rat(rng.gen_range(1..=9), rng.gen_range(1..=9));
        assert_eq!((p.clone() * r.clone()).eval(&q), p.eval(&q) * r.eval(&q));
    }
}

#[test]
fn scalar_json_roundtrips() {
    let q = rat(-7, 3);
    assert_eq!(Rational::from_json(&q.to_json()).unwrap(), q);
    let t = tau();
    assert_eq!(Quad5::from_json(&t.to_json()).unwrap(), t);
    let p = gauss_c(4) * LaurentPoly::v_pow(-3);
    assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap(), p);
}

#[test]
fn pow_enclosure_brackets() {
    // 4^(1/2) = 2 must be inside, tightly
    let e = pow_enclosure(&rat(4, 1), 1, 2, 40);
    assert!(e.lo <= rat(2, 1) && rat(2, 1) <= e.hi);
    assert!(e.width() < rat(1, 1 << 30));
    // 2^(3/4) irrational: interval must strictly bracket and narrow
    let coarse = pow_enclosure(&rat(2, 1), 3, 4, 16);
    let fine = pow_enclosure(&rat(2, 1), 3, 4, 64);
    assert!(coarse.lo <= fine.lo && fine.hi <= coarse.hi);
    assert!(fine.width() < coarse.width());
    // value^den must bracket base^num
    let target = rat(8, 1);
    let lo4 = num_traits::pow(fine.lo.clone(), 4);
    let hi4 = num_traits::pow(fine.hi.clone(), 4);
    assert!(lo4 <= target && target <= hi4);
}

#[test]
fn interval_det_sign() {
    let m = vec![
        vec![DyadicInterval::from_int(2), DyadicInterval::from_int(-1)],
        vec![DyadicInterval::from_int(-1), DyadicInterval::from_int(2)],
    ];
    let d = interval_det(&m);
    assert_eq!(d.sign(), Some(Sign::Plus));
    assert_eq!(d.lo, rat(3, 1));
}

#[test]
fn ray_unit_normalization() {
    // field towers: dividing by the unit gives 1
    let q = rat(-7, 3);
    assert!(q.div_unit(&q.ray_unit()).is_one());
    // Laurent: monic with min exponent 0
    let p = gauss_c(3).shifted(-4) * LaurentPoly::constant(rat(3, 5));
    let u = p.ray_unit();
    let n = p.div_unit(&u);
    assert_eq!(n.min_exp(), Some(0));
    assert!(n.coeff(0).is_one());
}

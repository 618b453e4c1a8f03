//! Interval-refined mode: intervals with exact rational endpoints, used to
//! certify signs of values that escape the exact towers (fractional powers
//! along NGCM homotopy paths). Arithmetic on endpoints is exact, so the only
//! width comes from enclosing irrational roots; callers narrow it by
//! re-enclosing at higher precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::Sign;

#[derive(Debug, Clone, PartialEq)]
pub struct DyadicInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl DyadicInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        DyadicInterval { lo, hi }
    }

    pub fn point(q: Rational) -> Self {
        DyadicInterval {
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::point(Rational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Certified sign: `None` when the interval straddles zero without
    /// being the exact point zero.
    pub fn sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Plus)
        } else if self.hi.is_negative() {
            Some(Sign::Minus)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        DyadicInterval::new(&self.lo + &rhs.lo, &self.hi + &rhs.hi)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        DyadicInterval::new(&self.lo - &rhs.hi, &self.hi - &rhs.lo)
    }

    pub fn neg(&self) -> Self {
        DyadicInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let cands = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if *c < lo {
                lo = c.clone();
            }
            if *c > hi {
                hi = c.clone();
            }
        }
        DyadicInterval::new(lo, hi)
    }
}

fn floor_nth_root(x: &BigInt, n: u32) -> BigInt {
    debug_assert!(!x.is_negative());
    x.nth_root(n)
}

/// Enclose `base^(num/den)` for a positive rational `base` and `den >= 1`,
/// with roughly `bits` bits of precision. The result brackets the true
/// value; tightening is by calling again with larger `bits`.
pub fn pow_enclosure(base: &Rational, num: i64, den: u32, bits: u32) -> DyadicInterval {
    assert!(base.is_positive(), "power enclosure requires base > 0");
    assert!(den >= 1);
    // exact integer power first
    let powed: Rational = if num >= 0 {
        num_traits::pow(base.clone(), num as usize)
    } else {
        num_traits::pow(base.recip(), (-num) as usize)
    };
    if den == 1 {
        return DyadicInterval::point(powed);
    }
    if powed.is_one() {
        return DyadicInterval::point(Rational::one());
    }
    // x^(1/den) for x = a/b: scale by 2^(den*bits) and take integer roots
    let a = powed.numer();
    let b = powed.denom();
    let scale = BigInt::one() << (den as usize * bits as usize);
    let scaled = a * &scale;
    let (q, r) = scaled.div_rem(b);
    let denom_scale = BigInt::one() << (bits as usize);
    let lo_int = floor_nth_root(&q, den);
    let hi_base = if r.is_zero() { q } else { q + BigInt::one() };
    let hi_int = floor_nth_root(&hi_base, den) + BigInt::one();
    DyadicInterval::new(
        Rational::new(lo_int, denom_scale.clone()),
        Rational::new(hi_int, denom_scale),
    )
}

/// Interval determinant of a small square matrix by cofactor expansion.
/// Ranks in this artifact stay tiny, so exponential expansion is fine and
/// avoids interval division entirely.
pub fn interval_det(m: &[Vec<DyadicInterval>]) -> DyadicInterval {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    match n {
        0 => DyadicInterval::from_int(1),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = DyadicInterval::zero();
            for (j, entry) in m[0].iter().enumerate() {
                let minor: Vec<Vec<DyadicInterval>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let term = entry.mul(&interval_det(&minor));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

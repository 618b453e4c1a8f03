//! Quadratic extensions `Q(sqrt(D))` for square-free `D`, with exact sign
//! determination via rational comparisons. `Quad5` carries the golden ratio
//! `tau = (1 + sqrt(5))/2`, which satisfies `tau^2 = tau + 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::rational::{rational_from_json, rational_json, rational_try_sqrt, Rational};
use super::{OrderedScalar, Scalar, ScalarParseError, Sign, Tower};

/// The element `a + b * sqrt(D)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt<const D: u32> {
    pub a: Rational,
    pub b: Rational,
}

pub type Quad5 = QuadExt<5>;

/// `tau = 2 cos(pi/5) = (1 + sqrt(5))/2`.
pub fn tau() -> Quad5 {
    let half = Rational::new(1.into(), 2.into());
    Quad5::new(half.clone(), half)
}

impl<const D: u32> QuadExt<D> {
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadExt { a, b }
    }

    pub fn from_parts(a: i64, b: i64) -> Self {
        QuadExt::new(Rational::from_integer(a.into()), Rational::from_integer(b.into()))
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn d_rat() -> Rational {
        Rational::from_integer(D.into())
    }

    /// Field conjugate `a - b * sqrt(D)`.
    pub fn conj(&self) -> Self {
        QuadExt::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a^2 - D b^2` (a rational).
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Self::d_rat() * &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            // D square-free, so norm vanishes only at zero
            return None;
        }
        let c = self.conj();
        Some(QuadExt::new(c.a / &n, c.b / &n))
    }
}

impl<const D: u32> fmt::Debug for QuadExt<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<const D: u32> fmt::Display for QuadExt<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", super::rational::rational_string(&self.a));
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt{}", super::rational::rational_string(&self.b), D);
        }
        write!(
            f,
            "{}{}{}*sqrt{}",
            super::rational::rational_string(&self.a),
            if self.b.is_negative() { "" } else { "+" },
            super::rational::rational_string(&self.b),
            D
        )
    }
}

impl<const D: u32> Add for QuadExt<D> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        QuadExt::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl<const D: u32> Sub for QuadExt<D> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        QuadExt::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl<const D: u32> Mul for QuadExt<D> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (a + b s)(c + e s) = ac + D be + (ae + bc) s
        let a = &self.a * &rhs.a + Self::d_rat() * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadExt::new(a, b)
    }
}

impl<const D: u32> Neg for QuadExt<D> {
    type Output = Self;
    fn neg(self) -> Self {
        QuadExt::new(-self.a, -self.b)
    }
}

impl<const D: u32> Zero for QuadExt<D> {
    fn zero() -> Self {
        QuadExt::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<const D: u32> One for QuadExt<D> {
    fn one() -> Self {
        QuadExt::new(Rational::one(), Rational::zero())
    }
}

fn quad_sign_parts(a: &Rational, b: &Rational, d: &Rational) -> Sign {
    // sign of a + b sqrt(d) by case analysis on the signs of a and b
    match (a.is_zero(), b.is_zero()) {
        (true, true) => Sign::Zero,
        (false, true) => rat_sign(a),
        (true, false) => rat_sign(b),
        (false, false) => match (a.is_positive(), b.is_positive()) {
            (true, true) => Sign::Plus,
            (false, false) => Sign::Minus,
            (true, false) => {
                // a > 0 > b sqrt(d): compare a^2 vs b^2 d
                rat_sign(&(a * a - b * b * d))
            }
            (false, true) => rat_sign(&(b * b * d - a * a)),
        },
    }
}

fn rat_sign(q: &Rational) -> Sign {
    if q.is_zero() {
        Sign::Zero
    } else if q.is_positive() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

impl<const D: u32> PartialOrd for QuadExt<D> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<const D: u32> Ord for QuadExt<D> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let diff = self.clone() - other.clone();
        match quad_sign_parts(&diff.a, &diff.b, &QuadExt::<D>::d_rat()) {
            Sign::Minus => std::cmp::Ordering::Less,
            Sign::Zero => std::cmp::Ordering::Equal,
            Sign::Plus => std::cmp::Ordering::Greater,
        }
    }
}

impl<const D: u32> Scalar for QuadExt<D> {
    fn tower() -> Tower {
        debug_assert_eq!(D, 5, "only the d=5 tower is wired into interchange formats");
        Tower::Quad5
    }

    fn from_int(n: i64) -> Self {
        QuadExt::new(Rational::from_integer(n.into()), Rational::zero())
    }

    fn from_rational(q: &Rational) -> Self {
        QuadExt::new(q.clone(), Rational::zero())
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        Some(self.clone() * rhs.inv()?)
    }

    fn try_sqrt(&self) -> Option<Self> {
        match self.try_sign()? {
            Sign::Minus => return None,
            Sign::Zero => return Some(Self::zero()),
            Sign::Plus => {}
        }
        let d = Self::d_rat();
        if self.b.is_zero() {
            // sqrt(a): rational, or y sqrt(D) with a = D y^2
            if let Some(x) = rational_try_sqrt(&self.a) {
                return Some(QuadExt::new(x, Rational::zero()));
            }
            if let Some(y) = rational_try_sqrt(&(&self.a / &d)) {
                return Some(QuadExt::new(Rational::zero(), y));
            }
            return None;
        }
        // (x + y sqrt(D))^2 = a + b sqrt(D) with 2xy = b forces x != 0 and
        // x^2 = (a +- sqrt(a^2 - D b^2)) / 2.
        let disc = &self.a * &self.a - &d * &self.b * &self.b;
        let s = rational_try_sqrt(&disc)?;
        let two = Rational::from_integer(2.into());
        for x2 in [(&self.a + &s) / &two, (&self.a - &s) / &two] {
            if let Some(x) = rational_try_sqrt(&x2) {
                if x.is_zero() {
                    continue;
                }
                let y = &self.b / (&two * &x);
                let cand = QuadExt::new(x, y);
                let cand = if cand.try_sign() == Some(Sign::Minus) {
                    -cand
                } else {
                    cand
                };
                if cand.clone() * cand.clone() == *self {
                    return Some(cand);
                }
            }
        }
        None
    }

    fn try_nth_root(&self, n: u32) -> Option<Self> {
        match n {
            1 => Some(self.clone()),
            2 => self.try_sqrt(),
            4 => self.try_sqrt().and_then(|r| r.try_sqrt()),
            _ => {
                if self.b.is_zero() {
                    super::rational::rational_try_nth_root(&self.a, n).map(|r| Self::from_rational(&r))
                } else {
                    None
                }
            }
        }
    }

    fn try_sign(&self) -> Option<Sign> {
        Some(quad_sign_parts(&self.a, &self.b, &Self::d_rat()))
    }

    fn four_cos2_pi(m: u32) -> Option<Self> {
        match m {
            5 if D == 5 => {
                // 4 cos^2(pi/5) = tau^2 = tau + 1 = (3 + sqrt 5)/2
                Some(QuadExt::new(
                    Rational::new(3.into(), 2.into()),
                    Rational::new(1.into(), 2.into()),
                ))
            }
            _ => Rational::four_cos2_pi(m).map(|q| Self::from_rational(&q)),
        }
    }

    fn ray_unit(&self) -> Self {
        debug_assert!(!self.is_zero());
        self.clone()
    }

    fn div_unit(&self, u: &Self) -> Self {
        self.exact_div(u).expect("ray units are invertible")
    }

    fn to_json(&self) -> Value {
        json!({ "a": rational_json(&self.a), "b": rational_json(&self.b), "d": D })
    }

    fn from_json(v: &Value) -> Result<Self, ScalarParseError> {
        let obj = v
            .as_object()
            .ok_or_else(|| ScalarParseError::Malformed(format!("expected quad object, got {v}")))?;
        let d = obj.get("d").and_then(Value::as_u64).unwrap_or(u64::from(D));
        if d != u64::from(D) {
            return Err(ScalarParseError::WrongTower {
                expected: Self::tower(),
            });
        }
        let a = obj
            .get("a")
            .map(rational_from_json)
            .transpose()?
            .unwrap_or_else(Rational::zero);
        let b = obj
            .get("b")
            .map(rational_from_json)
            .transpose()?
            .unwrap_or_else(Rational::zero);
        Ok(QuadExt::new(a, b))
    }
}

impl<const D: u32> OrderedScalar for QuadExt<D> {
    fn enclose(&self, bits: u32) -> super::DyadicInterval {
        use super::DyadicInterval;
        if self.b.is_zero() {
            return DyadicInterval::point(self.a.clone());
        }
        let sqrt_d = super::pow_enclosure(&Self::d_rat(), 1, 2, bits);
        DyadicInterval::point(self.a.clone())
            .add(&DyadicInterval::point(self.b.clone()).mul(&sqrt_d))
    }
}

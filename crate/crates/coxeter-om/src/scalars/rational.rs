//! The rational tower, backed by arbitrary-precision `BigRational`.

use num_bigint::BigInt;

use num_traits::{One, Signed, Zero};
use serde_json::Value;

use super::{Scalar, ScalarParseError, Sign, Tower};

pub type Rational = num_rational::BigRational;

pub fn parse_rational(s: &str) -> Result<Rational, ScalarParseError> {
    let bad = || ScalarParseError::Malformed(format!("not a rational: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| bad())?;
            let d: BigInt = den.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

/// Canonical `"p/q"` form; the denominator is omitted when it is 1.
pub fn rational_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rational_json(q: &Rational) -> Value {
    Value::String(rational_string(q))
}

pub fn rational_from_json(v: &Value) -> Result<Rational, ScalarParseError> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else {
                Err(ScalarParseError::Malformed(format!(
                    "non-integer numeric rational: {n}"
                )))
            }
        }
        other => Err(ScalarParseError::Malformed(format!(
            "expected rational string, got {other}"
        ))),
    }
}

fn bigint_exact_nth_root(x: &BigInt, n: u32) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.nth_root(n);
    if num_traits::pow(r.clone(), n as usize) == *x {
        Some(r)
    } else {
        None
    }
}

pub fn rational_try_nth_root(q: &Rational, n: u32) -> Option<Rational> {
    assert!(n >= 1);
    if n == 1 {
        return Some(q.clone());
    }
    if q.is_negative() {
        return None;
    }
    let num = bigint_exact_nth_root(q.numer(), n)?;
    let den = bigint_exact_nth_root(q.denom(), n)?;
    Some(Rational::new(num, den))
}

pub fn rational_try_sqrt(q: &Rational) -> Option<Rational> {
    rational_try_nth_root(q, 2)
}

impl Scalar for Rational {
    fn tower() -> Tower {
        Tower::Rational
    }

    fn from_int(n: i64) -> Self {
        Rational::from_integer(n.into())
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn try_sqrt(&self) -> Option<Self> {
        rational_try_sqrt(self)
    }

    fn try_nth_root(&self, n: u32) -> Option<Self> {
        rational_try_nth_root(self, n)
    }

    fn try_sign(&self) -> Option<Sign> {
        Some(if self.is_zero() {
            Sign::Zero
        } else if self.is_positive() {
            Sign::Plus
        } else {
            Sign::Minus
        })
    }

    fn four_cos2_pi(m: u32) -> Option<Self> {
        match m {
            2 => Some(Rational::zero()),
            3 => Some(Rational::one()),
            4 => Some(Self::from_int(2)),
            6 => Some(Self::from_int(3)),
            _ => None,
        }
    }

    fn ray_unit(&self) -> Self {
        debug_assert!(!self.is_zero());
        self.clone()
    }

    fn div_unit(&self, u: &Self) -> Self {
        self / u
    }

    fn to_json(&self) -> Value {
        rational_json(self)
    }

    fn from_json(v: &Value) -> Result<Self, ScalarParseError> {
        rational_from_json(v)
    }
}

impl super::OrderedScalar for Rational {
    fn enclose(&self, _bits: u32) -> super::DyadicInterval {
        super::DyadicInterval::point(self.clone())
    }
}

//! Exact scalar towers with certified sign computation.
//!
//! Three towers are supported: the rationals, the quadratic extension
//! `Q(sqrt(d))` (with `d = 5` housing the golden ratio), and Laurent
//! polynomials in `v` over `Q`. A fourth, interval-refined mode
//! ([`DyadicInterval`]) certifies signs of values that escape the exact
//! towers (irrational powers along homotopy paths).

mod interval;
mod laurent;
mod quad;
mod rational;

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::Value;
use thiserror::Error;

pub use interval::{interval_det, pow_enclosure, DyadicInterval};
pub use laurent::{gauss_c, laurent_sign_at, LaurentPoly};
pub use quad::{tau, Quad5, QuadExt};
pub use rational::{
    parse_rational, rational_from_json, rational_json, rational_string, rational_try_nth_root,
    rational_try_sqrt, Rational,
};

/// Exact sign of a scalar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of_i64(n: i64) -> Self {
        match n.cmp(&0) {
            std::cmp::Ordering::Less => Sign::Minus,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Plus,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }

    /// Sign of a product.
    pub fn mul(self, other: Self) -> Self {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (Sign::Plus, s) => s,
            (Sign::Minus, s) => s.flip(),
        }
    }

    pub fn pow(self, e: u32) -> Self {
        if e == 0 {
            return Sign::Plus;
        }
        match self {
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Plus,
            Sign::Minus => {
                if e % 2 == 0 {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            }
        }
    }

    pub fn is_nonneg(self) -> bool {
        !matches!(self, Sign::Minus)
    }
}

impl Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-",
            Sign::Zero => "0",
            Sign::Plus => "+",
        })
    }
}

/// Evaluation regime for Laurent-polynomial signs: one of the three sign
/// regimes of the parameter `v`, or a concrete positive rational.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum SignRegime {
    Below1,
    At1,
    Above1,
    At(String),
}

impl SignRegime {
    pub fn at(q: Rational) -> Self {
        SignRegime::At(rational_string(&q))
    }

    /// Sign of `v - v^{-1}` on this regime.
    pub fn sign_v_minus_vinv(&self) -> Sign {
        match self {
            SignRegime::Below1 => Sign::Minus,
            SignRegime::At1 => Sign::Zero,
            SignRegime::Above1 => Sign::Plus,
            SignRegime::At(s) => {
                let q = parse_rational(s).expect("regime rational");
                let one = Rational::one();
                if q > one {
                    Sign::Plus
                } else if q < one {
                    Sign::Minus
                } else {
                    Sign::Zero
                }
            }
        }
    }

    /// A concrete rational representative of the regime.
    pub fn representative(&self) -> Rational {
        match self {
            SignRegime::Below1 => Rational::new(1.into(), 2.into()),
            SignRegime::At1 => Rational::one(),
            SignRegime::Above1 => Rational::from_integer(2.into()),
            SignRegime::At(s) => parse_rational(s).expect("regime rational"),
        }
    }
}

/// Which scalar tower a type belongs to, as named in the JSON interchange
/// formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tower {
    Rational,
    Quad5,
    Laurent,
    Interval,
}

impl Display for Tower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Tower::Rational => "rational",
            Tower::Quad5 => "quad5",
            Tower::Laurent => "laurent",
            Tower::Interval => "interval",
        })
    }
}

#[derive(Debug, Error)]
pub enum ScalarParseError {
    #[error("malformed scalar value: {0}")]
    Malformed(String),
    #[error("value belongs to a different tower: expected {expected}")]
    WrongTower { expected: Tower },
}

/// An exact scalar: a commutative ring element with decidable equality,
/// exact division, and certified (possibly partial) sign information.
///
/// All values are immutable and all operations pure, so scalars may be
/// shared freely across threads.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
    + Send
    + Sync
    + 'static
{
    fn tower() -> Tower;

    fn from_int(n: i64) -> Self;

    fn from_rational(q: &Rational) -> Self;

    /// Exact division within the tower: `Some(q)` iff `self == q * rhs`.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    /// Principal square root when it exists in the tower.
    fn try_sqrt(&self) -> Option<Self>;

    /// Principal `n`-th root when it exists in the tower.
    fn try_nth_root(&self, n: u32) -> Option<Self>;

    /// Certified sign. Ordered towers always answer. The Laurent tower
    /// answers when the sign is provably constant on all of `v > 0`
    /// (uniformly signed coefficients); `None` means "not certified",
    /// never "unknown sign exists".
    fn try_sign(&self) -> Option<Sign>;

    /// `4 cos^2(pi/m)` when representable in this tower.
    fn four_cos2_pi(m: u32) -> Option<Self>;

    /// The unit used to canonicalize ray representatives: for fields the
    /// value itself, for the Laurent ring the monomial `c v^k` carrying the
    /// lowest exponent. Must be invertible; `self` must be nonzero.
    fn ray_unit(&self) -> Self;

    /// Division by a [`Scalar::ray_unit`] output; always exact.
    fn div_unit(&self, u: &Self) -> Self;

    fn to_json(&self) -> Value;

    fn from_json(v: &Value) -> Result<Self, ScalarParseError>;
}

/// A scalar tower with a decidable total order (an ordered field): the
/// rationals and the quadratic towers, but not the Laurent tower.
pub trait OrderedScalar: Scalar + Ord {
    fn sign(&self) -> Sign {
        self.try_sign().expect("ordered tower signs are total")
    }

    fn is_positive_strict(&self) -> bool {
        self.sign() == Sign::Plus
    }

    fn abs(&self) -> Self {
        if self.sign() == Sign::Minus {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Enclose the value in an interval with rational endpoints at roughly
    /// `bits` bits of precision (exact point for rationals).
    fn enclose(&self, bits: u32) -> DyadicInterval;
}

#[cfg(test)]
mod tests;

//! Laurent polynomials in `v` over the rationals, the coefficient ring of
//! the generic reflection representation. Houses the Gaussian (quantum)
//! integers `c_n = (v^n - v^{-n})/(v - v^{-1})`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use super::rational::{rational_from_json, rational_json, rational_try_sqrt, Rational};
use super::{Scalar, ScalarParseError, Sign, Tower};

/// A finitely supported map from exponents of `v` to rational coefficients.
/// No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn from_coeffs<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in iter {
            if c.is_zero() {
                continue;
            }
            let entry = coeffs.entry(e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(&e);
            }
        }
        LaurentPoly { coeffs }
    }

    /// The monomial `c * v^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        Self::from_coeffs([(e, c)])
    }

    /// The variable `v`.
    pub fn v() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `v^e` for any integer `e`.
    pub fn v_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    /// `v - v^{-1}`.
    pub fn v_minus_vinv() -> Self {
        Self::from_coeffs([(1, Rational::one()), (-1, -Rational::one())])
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.coeffs.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Degree span `max exponent - min exponent`; zero for monomials.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.values().next_back()
    }

    /// `Some((c, e))` when the polynomial is the single monomial `c v^e`.
    pub fn as_monomial(&self) -> Option<(Rational, i64)> {
        if self.coeffs.len() == 1 {
            let (e, c) = self.coeffs.iter().next().unwrap();
            Some((c.clone(), *e))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        match self.as_monomial() {
            Some((c, 0)) => Some(c),
            _ => None,
        }
    }

    /// Multiply by `v^e`.
    pub fn shifted(&self, e: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    /// Substitute `v -> q` for a positive rational `q`.
    pub fn eval(&self, q: &Rational) -> Rational {
        assert!(q.is_positive(), "Laurent evaluation requires v > 0");
        let qinv = q.recip();
        let mut acc = Rational::zero();
        for (&e, c) in &self.coeffs {
            let p = if e >= 0 {
                num_traits::pow(q.clone(), e as usize)
            } else {
                num_traits::pow(qinv.clone(), (-e) as usize)
            };
            acc += c * p;
        }
        acc
    }

    /// Substitute `v -> 1` (always defined for genuine Laurent polynomials).
    pub fn eval_at_one(&self) -> Rational {
        self.coeffs.values().fold(Rational::zero(), |a, c| a + c)
    }

    /// Exact polynomial division: `Some(q)` iff `self == q * rhs`.
    pub fn exact_div_poly(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let self_min = self.min_exp().unwrap();
        let rhs_min = rhs.min_exp().unwrap();
        let rhs_max = rhs.max_exp().unwrap();
        let q_min = self_min - rhs_min;
        let rhs_lead = rhs.coeff(rhs_max);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let e = rem.max_exp().unwrap() - rhs_max;
            if e < q_min {
                return None;
            }
            let c = rem.coeff(rem.max_exp().unwrap()) / &rhs_lead;
            let term = LaurentPoly::monomial(c, e);
            rem = rem - term.clone() * rhs.clone();
            quot = quot + term;
        }
        Some(quot)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, c) in self.coeffs.iter().rev() {
            if first {
                first = false;
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            let ac = c.abs();
            let show_coeff = !ac.is_one() || e == 0;
            if show_coeff {
                write!(f, "{}", super::rational::rational_string(&ac))?;
            }
            if e != 0 {
                if show_coeff {
                    f.write_str("*")?;
                }
                if e == 1 {
                    f.write_str("v")?;
                } else {
                    write!(f, "v^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl Add for LaurentPoly {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.coeffs {
            let entry = self.coeffs.entry(e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                self.coeffs.remove(&e);
            }
        }
        self
    }
}

impl Sub for LaurentPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = Self;
    fn neg(self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut coeffs: BTreeMap<i64, Rational> = BTreeMap::new();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                let e = e1 + e2;
                let entry = coeffs.entry(e).or_insert_with(Rational::zero);
                *entry += c1 * c2;
                if entry.is_zero() {
                    coeffs.remove(&e);
                }
            }
        }
        LaurentPoly { coeffs }
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::constant(Rational::one())
    }
}

impl Scalar for LaurentPoly {
    fn tower() -> Tower {
        Tower::Laurent
    }

    fn from_int(n: i64) -> Self {
        LaurentPoly::constant(Rational::from_integer(n.into()))
    }

    fn from_rational(q: &Rational) -> Self {
        LaurentPoly::constant(q.clone())
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.exact_div_poly(rhs)
    }

    fn try_sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lo = self.min_exp().unwrap();
        if lo % 2 != 0 || self.span() % 2 != 0 {
            return None;
        }
        // shift to an ordinary polynomial with nonzero constant term and
        // recover the root coefficient by coefficient
        let u = self.shifted(-lo);
        let s = u.span();
        let c0 = rational_try_sqrt(&u.coeff(0))?;
        if c0.is_zero() {
            return None;
        }
        let mut q = vec![Rational::zero(); (s / 2 + 1) as usize];
        q[0] = c0;
        let two = Rational::from_integer(2.into());
        for k in 1..=(s / 2) as usize {
            let mut acc = u.coeff(k as i64);
            for i in 1..k {
                acc -= &q[i] * &q[k - i];
            }
            q[k] = acc / (&two * &q[0]);
        }
        let root = LaurentPoly::from_coeffs(q.into_iter().enumerate().map(|(i, c)| (i as i64, c)))
            .shifted(lo / 2);
        if root.clone() * root.clone() == *self {
            Some(root)
        } else {
            None
        }
    }

    fn try_nth_root(&self, n: u32) -> Option<Self> {
        match n {
            1 => Some(self.clone()),
            2 => self.try_sqrt(),
            4 => self.try_sqrt().and_then(|r| r.try_sqrt()),
            _ => {
                let c = self.as_constant()?;
                super::rational::rational_try_nth_root(&c, n).map(Self::constant)
            }
        }
    }

    fn try_sign(&self) -> Option<Sign> {
        // certified constant sign on all of v > 0: uniformly signed coefficients
        if self.is_zero() {
            return Some(Sign::Zero);
        }
        let mut pos = false;
        let mut neg = false;
        for c in self.coeffs.values() {
            if c.is_positive() {
                pos = true;
            } else {
                neg = true;
            }
        }
        match (pos, neg) {
            (true, false) => Some(Sign::Plus),
            (false, true) => Some(Sign::Minus),
            _ => None,
        }
    }

    fn four_cos2_pi(m: u32) -> Option<Self> {
        Rational::four_cos2_pi(m).map(|q| Self::constant(q))
    }

    fn ray_unit(&self) -> Self {
        // the units of the Laurent ring are the monomials
        let lo = self.min_exp().expect("ray unit of a nonzero scalar");
        LaurentPoly::monomial(self.coeff(lo), lo)
    }

    fn div_unit(&self, u: &Self) -> Self {
        let (c, e) = u.as_monomial().expect("Laurent ray units are monomials");
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, a)| (k - e, a / &c))
                .collect(),
        }
    }

    fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (&e, c) in &self.coeffs {
            map.insert(e.to_string(), rational_json(c));
        }
        Value::Object(map)
    }

    fn from_json(v: &Value) -> Result<Self, ScalarParseError> {
        // a bare rational string is accepted as a constant
        if let Value::String(_) | Value::Number(_) = v {
            return Ok(Self::constant(rational_from_json(v)?));
        }
        let obj = v.as_object().ok_or_else(|| {
            ScalarParseError::Malformed(format!("expected Laurent {{exp: coeff}} map, got {v}"))
        })?;
        let mut coeffs = Vec::new();
        for (k, val) in obj {
            let e: i64 = k
                .parse()
                .map_err(|_| ScalarParseError::Malformed(format!("bad exponent {k:?}")))?;
            coeffs.push((e, rational_from_json(val)?));
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

/// The Gaussian (quantum) integer `c_n = (v^n - v^{-n})/(v - v^{-1})`;
/// for `n > 0` this is `v^{n-1} + v^{n-3} + ... + v^{-n+1}`, and
/// `c_{-n} = -c_n`, `c_0 = 0`. Evaluation at `v = 1` gives `n`.
pub fn gauss_c(n: i64) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    if n < 0 {
        return -gauss_c(-n);
    }
    LaurentPoly::from_coeffs((0..n).map(|i| (n - 1 - 2 * i, Rational::one())))
}

/// Exact sign of `p(q)` for a positive rational `q`.
pub fn laurent_sign_at(p: &LaurentPoly, q: &Rational) -> Sign {
    assert!(q.is_positive(), "sign evaluation requires q > 0");
    let val = p.eval(q);
    if val.is_zero() {
        Sign::Zero
    } else if val.is_positive() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

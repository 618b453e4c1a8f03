//! Determinants of root tuples over the Laurent ring and their
//! factorization certificates: every determinant of `n+1` roots of `Ã_n` is
//! either zero or `mu v^l (v - v^{-1})^{m-1} prod_{k=1}^m c_{h_k}` with
//! `mu = ±1`, `m >= 1`, `h_k >= 1`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::det_of_columns;
use crate::scalars::{gauss_c, laurent_sign_at, LaurentPoly, Rational, Scalar, Sign, SignRegime};

use super::{root_coords, AffineIndex};

/// Exact determinant of the linear operator sending `alpha_j` to the
/// `j`-th root of the tuple, via fraction-free elimination.
pub fn det_roots(n: usize, tuple: &[AffineIndex]) -> LaurentPoly {
    assert_eq!(tuple.len(), n + 1, "tuple of n+1 roots required");
    let cols: Vec<Vec<LaurentPoly>> = tuple.iter().map(|idx| root_coords(n, idx)).collect();
    det_of_columns(&cols)
}

/// A verified factorization `mu v^l (v - v^{-1})^{m-1} prod c_{h_k}`.
/// `hs` is the sorted multiset `{h_1 <= ... <= h_m}`; `m = hs.len()`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredForm {
    pub mu: i8,
    pub l: i64,
    pub hs: Vec<u32>,
}

impl FactoredForm {
    pub fn m(&self) -> usize {
        self.hs.len()
    }

    /// Re-expand the certificate; soundness is exact equality with the
    /// input polynomial.
    pub fn expand(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::monomial(
            Rational::from_integer(i64::from(self.mu).into()),
            self.l,
        );
        let vmv = LaurentPoly::v_minus_vinv();
        for _ in 1..self.m() {
            acc = acc * vmv.clone();
        }
        for &h in &self.hs {
            acc = acc * gauss_c(i64::from(h));
        }
        acc
    }
}

/// Outcome of determinant factorization. `NotOfForm` is a value, not an
/// error; the factorization theorem asserts it never occurs for genuine
/// root-tuple determinants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactoredDet {
    Zero,
    Factored(FactoredForm),
    NotOfForm,
}

impl FactoredDet {
    pub fn is_of_form(&self) -> bool {
        !matches!(self, FactoredDet::NotOfForm)
    }
}

/// Factor a Laurent polynomial into the theorem's canonical form.
///
/// The exponent `m - 1` of `(v - v^{-1})` is forced: quantum-integer
/// products are nonzero at `v = 1`, so greedy exact division determines it.
/// The residue is matched against products of `c_h` by trial division from
/// the largest possible `h` downward with backtracking, padding with
/// `c_1 = 1` up to `m` factors. Certificates are verified by re-expansion.
pub fn factor_det(p: &LaurentPoly) -> FactoredDet {
    if p.is_zero() {
        return FactoredDet::Zero;
    }
    let vmv = LaurentPoly::v_minus_vinv();
    let mut outside = 0usize;
    let mut r = p.clone();
    while let Some(q) = r.exact_div(&vmv) {
        r = q;
        outside += 1;
    }
    let lo = r.min_exp().unwrap();
    let hi = r.max_exp().unwrap();
    if (lo + hi) % 2 != 0 {
        return FactoredDet::NotOfForm;
    }
    let l = (lo + hi) / 2;
    let lead = r.coeff(hi);
    let mu: i8 = if lead.is_one() {
        1
    } else if (-lead.clone()).is_one() {
        -1
    } else {
        return FactoredDet::NotOfForm;
    };
    let mut q = r.shifted(-l);
    if mu < 0 {
        q = -q;
    }
    let mut factors: Vec<u32> = Vec::new();
    if !peel_c_factors(&q, &mut factors) {
        return FactoredDet::NotOfForm;
    }
    let m = outside + 1;
    if factors.len() > m {
        // more nontrivial quantum factors than the (v - v^{-1}) count allows
        return FactoredDet::NotOfForm;
    }
    let mut hs = vec![1u32; m - factors.len()];
    hs.extend(factors);
    hs.sort_unstable();
    let form = FactoredForm { mu, l, hs };
    debug_assert_eq!(form.expand(), *p, "certificate must re-expand exactly");
    FactoredDet::Factored(form)
}

fn peel_c_factors(q: &LaurentPoly, acc: &mut Vec<u32>) -> bool {
    if q.is_one() {
        return true;
    }
    let span = q.span();
    if span == 0 {
        return false;
    }
    let hmax = span / 2 + 1;
    for h in (2..=hmax).rev() {
        if let Some(rest) = q.exact_div(&gauss_c(h)) {
            acc.push(h as u32);
            if peel_c_factors(&rest, acc) {
                return true;
            }
            acc.pop();
        }
    }
    false
}

/// Sign of a certificate at a regime: `v^l > 0` and `c_h(v) > 0` for
/// `h >= 1, v > 0`, so the sign is `mu * sgn(v - v^{-1})^{m-1}`.
pub fn chirotope_sign_of_certificate(det: &FactoredDet, regime: &SignRegime) -> Option<Sign> {
    match det {
        FactoredDet::Zero => Some(Sign::Zero),
        FactoredDet::Factored(f) => {
            let base = regime.sign_v_minus_vinv().pow((f.m() - 1) as u32);
            Some(Sign::of_i64(i64::from(f.mu)).mul(base))
        }
        FactoredDet::NotOfForm => None,
    }
}

/// Chirotope sign of a tuple determinant at a regime. Falls back to direct
/// evaluation at the regime representative for polynomials outside the
/// canonical form (unreachable for genuine root determinants).
pub fn chirotope_sign(p: &LaurentPoly, regime: &SignRegime) -> Sign {
    match chirotope_sign_of_certificate(&factor_det(p), regime) {
        Some(s) => s,
        None => laurent_sign_at(p, &regime.representative()),
    }
}

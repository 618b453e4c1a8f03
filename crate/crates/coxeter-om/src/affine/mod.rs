//! Type `Ã_n` specifics: the canonical `v`-form, the closed-form root
//! indices `±v^m (c_{k+1} alpha_{i,j} + c_k alpha'_{i,j})`, the symbolic
//! reflection action on indices, membership testing, and determinant
//! factorization certificates over the Laurent ring.

mod det;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coxeter::{validate_ngcm, Ngcm, NgcmViolation, RescalingDiag};
use num_traits::Zero;

use crate::scalars::{gauss_c, LaurentPoly, OrderedScalar, Rational, Scalar, Sign};

pub use det::{
    chirotope_sign, chirotope_sign_of_certificate, det_roots, factor_det, FactoredDet,
    FactoredForm,
};

/// Symbolic index of an `Ã_n` root `eta v^m (c_{k+1} alpha_{i,j} + c_k
/// alpha'_{i,j})` with `1 <= i <= j <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineIndex {
    pub eta: i8,
    pub m: i64,
    pub k: i64,
    pub i: usize,
    pub j: usize,
}

impl AffineIndex {
    pub fn new(eta: i8, m: i64, k: i64, i: usize, j: usize) -> Self {
        assert!(eta == 1 || eta == -1);
        assert!(1 <= i && i <= j);
        AffineIndex { eta, m, k, i, j }
    }

    /// The simple root `alpha_p` for `1 <= p <= n`.
    pub fn simple(p: usize) -> Self {
        AffineIndex::new(1, 0, 0, p, p)
    }

    /// `alpha_0 = alpha'_{1,n}`, realized as `eta = -1, k = -1`.
    pub fn alpha_zero(n: usize) -> Self {
        AffineIndex::new(-1, 0, -1, 1, n)
    }

    pub fn negated(&self) -> Self {
        AffineIndex { eta: -self.eta, ..*self }
    }

    /// Cell of the maximal dihedral partition `Phi = ⊔ Phi_{i,j}`.
    pub fn phi_ij(&self) -> (usize, usize) {
        (self.i, self.j)
    }
}

impl std::fmt::Display for AffineIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, m={}, k={}, [{},{}])",
            if self.eta > 0 { "+" } else { "-" },
            self.m,
            self.k,
            self.i,
            self.j
        )
    }
}

/// Coordinate column of the root over `alpha_0..alpha_n`: row 0 carries
/// `c_k`, rows `1..i-1` carry `v c_k`, rows `i..j` carry `c_{k+1}`, rows
/// `j+1..n` carry `v^{-1} c_k`, all scaled by `eta v^m`.
pub fn root_coords(n: usize, idx: &AffineIndex) -> Vec<LaurentPoly> {
    assert!(n >= 2 && idx.j <= n, "index out of range for rank {n}");
    let ck = gauss_c(idx.k);
    let ck1 = gauss_c(idx.k + 1);
    let scale = LaurentPoly::monomial(
        Rational::from_integer(i64::from(idx.eta).into()),
        idx.m,
    );
    let mut out = Vec::with_capacity(n + 1);
    for row in 0..=n {
        let base = if row == 0 {
            ck.clone()
        } else if row < idx.i {
            ck.shifted(1)
        } else if row <= idx.j {
            ck1.clone()
        } else {
            ck.shifted(-1)
        };
        out.push(scale.clone() * base);
    }
    out
}

/// Image of an indexed root under the simple reflection `s_{alpha_p}`,
/// `0 <= p <= n`, following the nine-case table of the closed form.
pub fn simple_reflect_index(n: usize, p: usize, idx: &AffineIndex) -> AffineIndex {
    assert!(p <= n && idx.j <= n);
    let &AffineIndex { eta, m, k, i, j } = idx;
    if p == 0 {
        return match (i == 1, j == n) {
            // s_0 on Phi_{1,n} stays inside it
            (true, true) => AffineIndex::new(-eta, m, -k - 2, 1, n),
            // s_0 (c_{k+1} a_{1,j} + c_k a'_{1,j}) = -v^{-1}(c_{-k} a_{j+1,n} + c_{-k-1} a'_{j+1,n})
            (true, false) => AffineIndex::new(-eta, m - 1, -k - 1, j + 1, n),
            // s_0 (c_{k+1} a_{i,n} + c_k a'_{i,n}) = -v(c_{-k} a_{1,i-1} + c_{-k-1} a'_{1,i-1})
            (false, true) => AffineIndex::new(-eta, m + 1, -k - 1, 1, i - 1),
            (false, false) => *idx,
        };
    }
    if p + 1 == i {
        // p = i-1 >= 1: block grows to the left
        AffineIndex::new(eta, m, k, i - 1, j)
    } else if p == i && i == j {
        AffineIndex::new(-eta, m, -k, i, i)
    } else if p == i {
        AffineIndex::new(eta, m, k, i + 1, j)
    } else if p == j {
        AffineIndex::new(eta, m, k, i, j - 1)
    } else if p == j + 1 {
        AffineIndex::new(eta, m, k, i, j + 1)
    } else {
        *idx
    }
}

/// Decide membership of an exact coordinate column in the symbolic root
/// system, recovering the unique index when it lies there.
pub fn membership(n: usize, coords: &[LaurentPoly]) -> Option<AffineIndex> {
    assert_eq!(coords.len(), n + 1);
    for i in 1..=n {
        'blocks: for j in i..=n {
            // the block value and the alpha'-side value
            let a = &coords[i];
            let b = &coords[0];
            let up = b.shifted(1);
            let down = b.shifted(-1);
            for (row, item) in coords.iter().enumerate().skip(1) {
                let want = if row < i {
                    &up
                } else if row <= j {
                    a
                } else {
                    &down
                };
                if item != want {
                    continue 'blocks;
                }
            }
            if let Some(idx) = solve_pair(a, b, i, j) {
                return Some(idx);
            }
        }
    }
    None
}

/// Solve `(a, b) = eta v^m (c_{k+1}, c_k)` exactly.
fn solve_pair(a: &LaurentPoly, b: &LaurentPoly, i: usize, j: usize) -> Option<AffineIndex> {
    let unit_of = |p: &LaurentPoly| -> Option<(i8, i64)> {
        let (c, e) = p.as_monomial()?;
        if c == Rational::from_integer(1.into()) {
            Some((1, e))
        } else if c == Rational::from_integer((-1).into()) {
            Some((-1, e))
        } else {
            None
        }
    };
    if a.is_zero() && b.is_zero() {
        return None;
    }
    if b.is_zero() {
        // k = 0: a = eta v^m
        let (eta, m) = unit_of(a)?;
        return Some(AffineIndex::new(eta, m, 0, i, j));
    }
    if a.is_zero() {
        // k = -1: b = eta v^m c_{-1} = -eta v^m
        let (s, m) = unit_of(b)?;
        return Some(AffineIndex::new(-s, m, -1, i, j));
    }
    let bound = b.span() / 2 + 2;
    for k in -bound..=bound {
        if k == 0 || k == -1 {
            continue;
        }
        let ck = gauss_c(k);
        let Some(u) = b.exact_div(&ck) else { continue };
        let Some((eta, m)) = unit_of(&u) else { continue };
        if *a == u * gauss_c(k + 1) {
            return Some(AffineIndex::new(eta, m, k, i, j));
        }
    }
    None
}

/// The canonical symbolic NGCM of `Ã_n`: `(alpha_0, alpha_1^vee) = -v`,
/// inner bonds `-1`, `(alpha_n, alpha_0^vee) = -v`, reciprocal partners.
pub fn canonical_ngcm_symbolic(n: usize) -> Ngcm<LaurentPoly> {
    assert!(n >= 2);
    let mut entries = vec![vec![LaurentPoly::zero(); n + 1]; n + 1];
    let minus_one = LaurentPoly::from_int(-1);
    for (d, row) in entries.iter_mut().enumerate() {
        row[d] = LaurentPoly::from_int(2);
    }
    entries[0][1] = -LaurentPoly::v();
    entries[1][0] = -LaurentPoly::v_pow(-1);
    for idx in 1..n {
        entries[idx][idx + 1] = minus_one.clone();
        entries[idx + 1][idx] = minus_one.clone();
    }
    entries[n][0] = -LaurentPoly::v();
    entries[0][n] = -LaurentPoly::v_pow(-1);
    validate_ngcm(entries).expect("canonical affine NGCM is valid")
}

/// The canonical NGCM specialized at a concrete rational `v > 0`.
pub fn canonical_ngcm_at(n: usize, v: &Rational) -> Ngcm<Rational> {
    let sym = canonical_ngcm_symbolic(n);
    let entries = sym
        .entries()
        .iter()
        .map(|row| row.iter().map(|e| e.eval(v)).collect())
        .collect();
    validate_ngcm(entries).expect("specialized affine NGCM is valid")
}

#[derive(Debug, Clone, Error)]
pub enum CanonicalizeError {
    #[error("expected at least 3 pairings (rank n >= 2), got {0}")]
    TooSmall(usize),
    #[error("pairing a_{0} = {1} must be strictly negative")]
    NonNegativeInput(usize, String),
    #[error("v = sqrt({radicand}) escapes the tower; extend it or use interval mode")]
    IrrationalV { radicand: String },
    #[error("input pairings do not form a valid NGCM: {0:?}")]
    InvalidInput(Vec<NgcmViolation>),
}

/// The `Ã_n` NGCM determined by cyclic pairings `(alpha_i, alpha_{i+1}^vee)
/// = a_i` (indices mod n+1); the reverse pairings are forced to `1/a_i`.
pub fn affine_input_ngcm<K: OrderedScalar>(a: &[K]) -> Result<Ngcm<K>, CanonicalizeError> {
    let n = a.len().checked_sub(1).ok_or(CanonicalizeError::TooSmall(0))?;
    if n < 2 {
        return Err(CanonicalizeError::TooSmall(a.len()));
    }
    for (idx, ai) in a.iter().enumerate() {
        if ai.sign() != Sign::Minus {
            return Err(CanonicalizeError::NonNegativeInput(idx, ai.to_string()));
        }
    }
    let mut entries = vec![vec![K::zero(); n + 1]; n + 1];
    for (d, row) in entries.iter_mut().enumerate() {
        row[d] = K::from_int(2);
    }
    for (idx, ai) in a.iter().enumerate() {
        let from = idx;
        let to = (idx + 1) % (n + 1);
        entries[from][to] = ai.clone();
        entries[to][from] = K::one().exact_div(ai).expect("nonzero pairing");
    }
    validate_ngcm(entries).map_err(CanonicalizeError::InvalidInput)
}

/// Canonicalize an `Ã_n` realization: from the cyclic pairings `a_0..a_n`
/// compute `v = sqrt(|a_0 a_1 ... a_n|)` and the rescaling diagonal that
/// carries the input NGCM to the canonical `v`-form.
pub fn canonicalize<K: OrderedScalar>(
    a: &[K],
) -> Result<(K, RescalingDiag<K>), CanonicalizeError> {
    let n = a.len().checked_sub(1).ok_or(CanonicalizeError::TooSmall(0))?;
    if n < 2 {
        return Err(CanonicalizeError::TooSmall(a.len()));
    }
    for (idx, ai) in a.iter().enumerate() {
        if ai.sign() != Sign::Minus {
            return Err(CanonicalizeError::NonNegativeInput(idx, ai.to_string()));
        }
    }
    let mut prod = K::one();
    for ai in a {
        prod = prod * ai.abs();
    }
    let v = prod
        .try_sqrt()
        .ok_or_else(|| CanonicalizeError::IrrationalV {
            radicand: prod.to_string(),
        })?;
    // alpha_i -> |a_1 ... a_{i-1}| alpha_i for 2 <= i <= n,
    // alpha_0 -> (|a_1 ... a_n| / v) alpha_0, alpha_1 unchanged
    let mut d = vec![K::one(); n + 1];
    let mut running = K::one();
    for i in 2..=n {
        running = running * a[i - 1].abs();
        d[i] = running.clone();
    }
    let tail = running * a[n].abs();
    d[0] = tail.exact_div(&v).expect("v divides the pairing product");
    Ok((v, RescalingDiag::new(d)))
}

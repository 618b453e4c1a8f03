//! NGCM validation and exact determinants.
//!
//! A matrix `A = (c[a][b])` with `c[a][b] = (alpha, beta^vee)` is an NGCM of
//! a Coxeter system iff the diagonal is 2, off-diagonal entries are <= 0
//! with a symmetric zero pattern, and every off-diagonal product
//! `c[a][b] * c[b][a]` is either `4 cos^2(pi/m)` for some finite bond `m` or
//! lies in `[4, infinity)`.


use thiserror::Error;

use crate::linalg::bareiss_det;
use crate::scalars::{Scalar, Sign};

use super::{CoxLabel, CoxeterMatrix};

/// Bond orders whose `4 cos^2(pi/m)` values are representable in at least
/// one exact tower (1, 2, tau^2, 3 for m = 3, 4, 5, 6).
pub const SUPPORTED_FINITE_BONDS: [u32; 4] = [3, 4, 5, 6];

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum NgcmViolation {
    #[error("matrix is not square")]
    NotSquare,
    #[error("diagonal entry ({i},{i}) must be 2, found {found}")]
    DiagonalNotTwo { i: usize, found: String },
    #[error("off-diagonal entry ({i},{j}) must be <= 0, found {found}")]
    OffDiagonalPositive { i: usize, j: usize, found: String },
    #[error("zero pattern asymmetric: entry ({i},{j}) is zero but ({j},{i}) is not")]
    AsymmetricZero { i: usize, j: usize },
    #[error("product at ({i},{j}) is {product}, not 4cos^2(pi/m) for a supported m nor >= 4")]
    ForbiddenProduct { i: usize, j: usize, product: String },
    #[error("sign of entry ({i},{j}) = {found} cannot be certified in this tower; instantiate the parameter or use interval mode")]
    UndecidableSign { i: usize, j: usize, found: String },
}

/// A validated NGCM together with its derived Coxeter matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ngcm<K: Scalar> {
    entries: Vec<Vec<K>>,
    cox: CoxeterMatrix,
}

impl<K: Scalar> Ngcm<K> {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &K {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<K>] {
        &self.entries
    }

    pub fn cox(&self) -> &CoxeterMatrix {
        &self.cox
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (i + 1..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Transposed pairing matrix: the NGCM of the dual datum (coroot side).
    pub fn transposed(&self) -> Ngcm<K> {
        let n = self.rank();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect())
            .collect();
        Ngcm {
            entries,
            cox: self.cox.clone(),
        }
    }

    /// Construct without re-deriving labels; debug-asserts validity.
    pub(crate) fn from_parts_unchecked(entries: Vec<Vec<K>>, cox: CoxeterMatrix) -> Self {
        debug_assert_eq!(entries.len(), cox.rank());
        Ngcm { entries, cox }
    }
}

/// Classify an off-diagonal product into a bond label.
fn classify_product<K: Scalar>(p: &K) -> Result<CoxLabel, ProductIssue> {
    for m in SUPPORTED_FINITE_BONDS {
        if let Some(target) = K::four_cos2_pi(m) {
            if *p == target {
                return Ok(CoxLabel::Finite(m));
            }
        }
    }
    let gap = p.clone() - K::from_int(4);
    match gap.try_sign() {
        Some(Sign::Zero) | Some(Sign::Plus) => Ok(CoxLabel::Infinite),
        Some(Sign::Minus) => Err(ProductIssue::Forbidden),
        None => Err(ProductIssue::Undecidable),
    }
}

enum ProductIssue {
    Forbidden,
    Undecidable,
}

/// Validate a square matrix of scalars as an NGCM, deriving the Coxeter
/// matrix (product `4cos^2(pi/m)` maps to `m`, products `>= 4` to `inf`,
/// zero to 2). All violations are collected, not just the first.
pub fn validate_ngcm<K: Scalar>(entries: Vec<Vec<K>>) -> Result<Ngcm<K>, Vec<NgcmViolation>> {
    let n = entries.len();
    let mut violations = Vec::new();
    if entries.iter().any(|row| row.len() != n) {
        return Err(vec![NgcmViolation::NotSquare]);
    }
    let two = K::from_int(2);
    let mut labels = vec![vec![CoxLabel::Finite(1); n]; n];
    for i in 0..n {
        if entries[i][i] != two {
            violations.push(NgcmViolation::DiagonalNotTwo {
                i,
                found: entries[i][i].to_string(),
            });
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let a = &entries[i][j];
            let b = &entries[j][i];
            let mut pair_ok = true;
            for (x, (r, s)) in [(a, (i, j)), (b, (j, i))] {
                match x.try_sign() {
                    Some(Sign::Plus) => {
                        violations.push(NgcmViolation::OffDiagonalPositive {
                            i: r,
                            j: s,
                            found: x.to_string(),
                        });
                        pair_ok = false;
                    }
                    None => {
                        violations.push(NgcmViolation::UndecidableSign {
                            i: r,
                            j: s,
                            found: x.to_string(),
                        });
                        pair_ok = false;
                    }
                    _ => {}
                }
            }
            if !pair_ok {
                continue;
            }
            match (a.is_zero(), b.is_zero()) {
                (true, true) => {
                    labels[i][j] = CoxLabel::Finite(2);
                    labels[j][i] = CoxLabel::Finite(2);
                }
                (true, false) => violations.push(NgcmViolation::AsymmetricZero { i, j }),
                (false, true) => violations.push(NgcmViolation::AsymmetricZero { i: j, j: i }),
                (false, false) => {
                    let p = a.clone() * b.clone();
                    match classify_product(&p) {
                        Ok(label) => {
                            labels[i][j] = label;
                            labels[j][i] = label;
                        }
                        Err(ProductIssue::Forbidden) => {
                            violations.push(NgcmViolation::ForbiddenProduct {
                                i,
                                j,
                                product: p.to_string(),
                            })
                        }
                        Err(ProductIssue::Undecidable) => {
                            violations.push(NgcmViolation::UndecidableSign {
                                i,
                                j,
                                found: p.to_string(),
                            })
                        }
                    }
                }
            }
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }
    let cox = CoxeterMatrix::new(labels).expect("derived labels are symmetric");
    Ok(Ngcm { entries, cox })
}

/// Exact determinant of the pairing matrix.
pub fn ngcm_det<K: Scalar>(a: &Ngcm<K>) -> K {
    bareiss_det(a.entries())
}

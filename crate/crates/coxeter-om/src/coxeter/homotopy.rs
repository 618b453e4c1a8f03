//! The homotopy path through NGCM space: for two NGCMs `A`, `B` of the same
//! Coxeter system, the interpolation fixes the diagonal at 2, keeps zeros,
//! and sets `c^(t)[a][b] = -|c'[a][b]|^t * |c[a][b]|^{1-t}` elsewhere. Every
//! point of the path is again an NGCM of the same Coxeter system.
//!
//! Rational `t` with perfect-power entries stays exact; everything else is
//! certified in interval mode.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalars::{
    pow_enclosure, DyadicInterval, OrderedScalar, Rational, Scalar, Sign,
};

use super::{CoxLabel, CoxeterMatrix, Ngcm};

#[derive(Debug, Clone, Error)]
pub enum HomotopyError {
    #[error("NGCMs have different Coxeter matrices")]
    MismatchedCoxeterMatrices,
    #[error("t = {t} outside [0,1]")]
    ParameterOutOfRange { t: String },
    #[error("{order}-th root of {radicand} (entry {i},{j}) escapes the tower; use interval mode")]
    RootEscapesTower {
        i: usize,
        j: usize,
        order: u32,
        radicand: String,
    },
}

fn split_t(t: &Rational) -> Result<(i64, u32), HomotopyError> {
    let err = || HomotopyError::ParameterOutOfRange {
        t: crate::scalars::rational_string(t),
    };
    if t < &Rational::zero() || t > &Rational::one() {
        return Err(err());
    }
    let num = i64::try_from(t.numer().clone()).map_err(|_| err())?;
    let den = u32::try_from(t.denom().clone()).map_err(|_| err())?;
    Ok((num, den))
}

fn pow_k<K: Scalar>(base: &K, e: u32) -> K {
    let mut acc = K::one();
    for _ in 0..e {
        acc = acc * base.clone();
    }
    acc
}

/// Exact interpolation at rational `t`; errors when a required root escapes
/// the tower.
pub fn ngcm_homotopy_exact<K: OrderedScalar>(
    a: &Ngcm<K>,
    b: &Ngcm<K>,
    t: &Rational,
) -> Result<Ngcm<K>, HomotopyError> {
    if a.cox() != b.cox() {
        return Err(HomotopyError::MismatchedCoxeterMatrices);
    }
    let (num, den) = split_t(t)?;
    let n = a.rank();
    let mut entries = vec![vec![K::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                entries[i][j] = K::from_int(2);
                continue;
            }
            let c = a.entry(i, j);
            let cp = b.entry(i, j);
            if c.is_zero() {
                continue;
            }
            // -( |c'|^num * |c|^{den-num} )^{1/den}
            let prod = pow_k(&cp.abs(), num as u32) * pow_k(&c.abs(), den - num as u32);
            let root = prod
                .try_nth_root(den)
                .ok_or_else(|| HomotopyError::RootEscapesTower {
                    i,
                    j,
                    order: den,
                    radicand: prod.to_string(),
                })?;
            entries[i][j] = -root;
        }
    }
    Ok(Ngcm::from_parts_unchecked(entries, a.cox().clone()))
}

/// Interval enclosure of one interpolated entry `-|c'|^t |c|^{1-t}` at
/// `t = num/den`.
pub fn homotopy_entry_interval<K: OrderedScalar>(
    c: &K,
    cp: &K,
    num: i64,
    den: u32,
    bits: u32,
) -> DyadicInterval {
    debug_assert!(num >= 0 && (num as u32) <= den);
    if c.is_zero() {
        return DyadicInterval::zero();
    }
    let prod = pow_k(&cp.abs(), num as u32) * pow_k(&c.abs(), den - num as u32);
    let encl = prod.enclose(bits);
    nth_root_enclosure(&encl, den, bits).neg()
}

fn nth_root_enclosure(x: &DyadicInterval, den: u32, bits: u32) -> DyadicInterval {
    if den == 1 {
        return x.clone();
    }
    let lo = if x.lo.is_zero() || x.lo < Rational::zero() {
        Rational::zero()
    } else {
        pow_enclosure(&x.lo, 1, den, bits).lo
    };
    let hi = pow_enclosure(&x.hi, 1, den, bits).hi;
    DyadicInterval::new(lo, hi)
}

/// The full interpolated matrix as intervals at `t = num/den`.
pub fn ngcm_homotopy_interval<K: OrderedScalar>(
    a: &Ngcm<K>,
    b: &Ngcm<K>,
    num: i64,
    den: u32,
    bits: u32,
) -> Result<Vec<Vec<DyadicInterval>>, HomotopyError> {
    if a.cox() != b.cox() {
        return Err(HomotopyError::MismatchedCoxeterMatrices);
    }
    if num < 0 || num as u32 > den {
        return Err(HomotopyError::ParameterOutOfRange {
            t: format!("{num}/{den}"),
        });
    }
    let n = a.rank();
    let mut out = vec![vec![DyadicInterval::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = if i == j {
                DyadicInterval::from_int(2)
            } else {
                homotopy_entry_interval(a.entry(i, j), b.entry(i, j), num, den, bits)
            };
        }
    }
    Ok(out)
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Certify that an interval matrix is an NGCM with the given Coxeter
/// matrix: exact diagonal 2, zero pattern matching the `m = 2` bonds,
/// strictly negative bonds elsewhere, and every product confined to a
/// window around its bond value that excludes every other legal product.
/// The caller guarantees the entries enclose a genuine NGCM (as homotopy
/// points are); this check certifies the labels at the given precision.
pub fn certify_interval_ngcm(
    entries: &[Vec<DyadicInterval>],
    expected: &CoxeterMatrix,
) -> Result<(), String> {
    let n = entries.len();
    if n != expected.rank() || entries.iter().any(|r| r.len() != n) {
        return Err("shape mismatch".into());
    }
    let two = DyadicInterval::from_int(2);
    for (i, row) in entries.iter().enumerate() {
        if row[i] != two {
            return Err(format!("diagonal ({i},{i}) is not the exact point 2"));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let label = expected.label(i, j);
            let e_ij = &entries[i][j];
            let e_ji = &entries[j][i];
            if label == CoxLabel::Finite(2) {
                if e_ij.sign() != Some(Sign::Zero) || e_ji.sign() != Some(Sign::Zero) {
                    return Err(format!("bond ({i},{j}) must be exactly zero"));
                }
                continue;
            }
            if e_ij.sign() != Some(Sign::Minus) || e_ji.sign() != Some(Sign::Minus) {
                return Err(format!(
                    "bond ({i},{j}) not certified strictly negative at this precision"
                ));
            }
            let p = e_ij.mul(e_ji);
            let window = match label {
                CoxLabel::Finite(3) => (rat(0, 1), rat(2, 1)),
                CoxLabel::Finite(4) => (rat(1, 1), rat(13, 5)),
                CoxLabel::Finite(5) => (rat(21, 10), rat(29, 10)),
                CoxLabel::Finite(6) => (rat(27, 10), rat(16, 5)),
                CoxLabel::Infinite => {
                    if p.lo >= rat(4, 1) {
                        continue;
                    }
                    return Err(format!(
                        "infinite bond ({i},{j}) product not certified >= 4 at this precision"
                    ));
                }
                other => return Err(format!("bond {other} not certifiable in interval mode")),
            };
            if !(p.lo > window.0 && p.hi < window.1) {
                return Err(format!(
                    "bond ({i},{j}) product [{}, {}] not confined to the m-window at this precision",
                    p.lo, p.hi
                ));
            }
        }
    }
    Ok(())
}

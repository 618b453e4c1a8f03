//! Transfer to the abstract root system `T x {±1}`.
//!
//! Reflection identity across realizations is keyed by the positive ray of
//! the witness word's image in a fixed reference realization of the same
//! Coxeter matrix. The reference convention: a symmetric bond entry where
//! the tower allows it (`-1` for m=3, `-tau` for m=5, `-2` for infinite
//! bonds) and the asymmetric pair `(-p, -1)` for the rational products
//! p = 2, 3 of m = 4, 6. Any valid realization works; this one is
//! deterministic and recorded in exports.

use thiserror::Error;

use crate::coxeter::{validate_ngcm, CoxLabel, CoxeterMatrix};
use crate::linalg::{proportional, rank_at_most_two};
use crate::scalars::{Quad5, Rational, Scalar, Sign};

use super::{RootDatum, Snapshot};

#[derive(Debug, Clone, Error)]
pub enum SpanError {
    #[error("bond m = {0} has no exact reference realization in the supported towers")]
    UnsupportedBond(u32),
    #[error("rays must be distinct")]
    DegenerateRays,
}

/// The fixed reference realization, in the smallest tower that fits.
#[derive(Debug, Clone)]
pub enum RefDatum {
    Q(RootDatum<Rational>),
    Q5(RootDatum<Quad5>),
}

/// Canonical positive-ray key in the reference realization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RefKey {
    Q(Vec<Rational>),
    Q5(Vec<Quad5>),
}

/// Image of a root in `T x {±1}`: the reflection key and the sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbstractRoot {
    pub key: RefKey,
    pub positive: bool,
}

fn ref_entries<K: Scalar>(cox: &CoxeterMatrix) -> Result<Vec<Vec<K>>, SpanError> {
    let n = cox.rank();
    let mut entries = vec![vec![K::zero(); n]; n];
    for i in 0..n {
        entries[i][i] = K::from_int(2);
        for j in 0..n {
            if i == j {
                continue;
            }
            let (a, b) = match cox.label(i, j) {
                CoxLabel::Finite(2) => (K::zero(), K::zero()),
                CoxLabel::Finite(3) => (K::from_int(-1), K::from_int(-1)),
                CoxLabel::Finite(4) => (K::from_int(-2), K::from_int(-1)),
                CoxLabel::Finite(5) => {
                    let t = K::four_cos2_pi(5).ok_or(SpanError::UnsupportedBond(5))?;
                    // 4cos^2(pi/5) = tau^2; the symmetric entry is -tau
                    let t = t.try_sqrt().ok_or(SpanError::UnsupportedBond(5))?;
                    (-t.clone(), -t)
                }
                CoxLabel::Finite(6) => (K::from_int(-3), K::from_int(-1)),
                CoxLabel::Infinite => (K::from_int(-2), K::from_int(-2)),
                CoxLabel::Finite(m) => return Err(SpanError::UnsupportedBond(m)),
            };
            if i < j {
                entries[i][j] = a;
            } else {
                entries[i][j] = b;
            }
        }
    }
    Ok(entries)
}

/// Build the reference realization for a Coxeter matrix.
pub fn reference_realization(cox: &CoxeterMatrix) -> Result<RefDatum, SpanError> {
    let needs_quad = (0..cox.rank()).any(|i| {
        (0..cox.rank()).any(|j| i != j && cox.label(i, j) == CoxLabel::Finite(5))
    });
    if needs_quad {
        let entries = ref_entries::<Quad5>(cox)?;
        let ngcm = validate_ngcm(entries).expect("reference entries form a valid NGCM");
        Ok(RefDatum::Q5(RootDatum::new(ngcm)))
    } else {
        let entries = ref_entries::<Rational>(cox)?;
        let ngcm = validate_ngcm(entries).expect("reference entries form a valid NGCM");
        Ok(RefDatum::Q(RootDatum::new(ngcm)))
    }
}

fn canonical_positive_key<K: Scalar>(vec: &[K]) -> (Vec<K>, bool) {
    let mut sign_positive = true;
    for c in vec {
        match c.try_sign().expect("reference towers have total signs") {
            Sign::Plus => break,
            Sign::Minus => {
                sign_positive = false;
                break;
            }
            Sign::Zero => continue,
        }
    }
    let pos: Vec<K> = if sign_positive {
        vec.to_vec()
    } else {
        vec.iter().map(|c| -c.clone()).collect()
    };
    (Snapshot::<K>::ray_key(&pos), sign_positive)
}

impl RefDatum {
    /// Reference image of a witness `(word, base)`: the canonical positive
    /// ray key plus whether the image itself was positive there.
    pub fn key_of_witness(&self, word: &[usize], base: usize) -> (RefKey, bool) {
        match self {
            RefDatum::Q(datum) => {
                let v = datum.apply_word(word, &datum.simple_root(base));
                let (key, pos) = canonical_positive_key(&v);
                (RefKey::Q(key), pos)
            }
            RefDatum::Q5(datum) => {
                let v = datum.apply_word(word, &datum.simple_root(base));
                let (key, pos) = canonical_positive_key(&v);
                (RefKey::Q5(key), pos)
            }
        }
    }

    /// Reference coordinate vectors of witnesses, for exact rank tests.
    pub fn witness_vectors_coplanar(&self, witnesses: &[(&[usize], usize)]) -> bool {
        match self {
            RefDatum::Q(datum) => {
                let vecs: Vec<Vec<Rational>> = witnesses
                    .iter()
                    .map(|(w, b)| datum.apply_word(w, &datum.simple_root(*b)))
                    .collect();
                rank_at_most_two(&vecs)
            }
            RefDatum::Q5(datum) => {
                let vecs: Vec<Vec<Quad5>> = witnesses
                    .iter()
                    .map(|(w, b)| datum.apply_word(w, &datum.simple_root(*b)))
                    .collect();
                rank_at_most_two(&vecs)
            }
        }
    }
}

/// Abstract images of the positive representatives of every snapshot ray.
/// Two rays receive the same key iff their reflections coincide in `W`.
pub fn abstract_transfer<K: Scalar>(
    snapshot: &Snapshot<K>,
) -> Result<Vec<AbstractRoot>, SpanError> {
    let reference = reference_realization(snapshot.datum().ngcm().cox())?;
    Ok(snapshot
        .rays()
        .iter()
        .map(|e| {
            let (key, ref_positive) = reference.key_of_witness(&e.word, e.base);
            // rep = ±(word image); its sign in the datum is positive by
            // construction, and in the reference the image sign flips with
            // the recorded negation
            let positive = ref_positive ^ e.negated;
            AbstractRoot { key, positive }
        })
        .collect())
}

/// All snapshot rays lying in the plane spanned by two given rays
/// (exact rank-2 test in the snapshot's own tower).
pub fn dihedral_span_roots<K: Scalar>(
    snapshot: &Snapshot<K>,
    r1: usize,
    r2: usize,
) -> Result<Vec<usize>, SpanError> {
    let a = &snapshot.ray(r1).rep;
    let b = &snapshot.ray(r2).rep;
    if r1 == r2 || proportional(a, b) {
        return Err(SpanError::DegenerateRays);
    }
    Ok((0..snapshot.len())
        .filter(|&i| {
            i == r1
                || i == r2
                || rank_at_most_two(&[a.clone(), b.clone(), snapshot.ray(i).rep.clone()])
        })
        .collect())
}


//! Bounded enumeration of a root system fragment.
//!
//! A snapshot is the breadth-first orbit of the simple roots under simple
//! reflections up to a word-length bound, deduplicated by ray (two roots are
//! identified when one is a positive scalar multiple of the other, which
//! genuinely happens for non-reduced realizations). Every ray carries a
//! verified word witness and the coroot of its representative.

use std::collections::HashMap;

use thiserror::Error;

use crate::scalars::{Scalar, Sign};

use super::RootDatum;

#[derive(Debug, Clone, Error)]
pub enum EnumerateError {
    #[error("coordinate sign undecidable in this tower for {coords:?}; instantiate the parameter")]
    SignUndecidable { coords: Vec<String> },
    #[error("mixed-sign coordinates {coords:?}: sign coherence violated (corrupt datum)")]
    MixedSigns { coords: Vec<String> },
}

/// One ray of the fragment: the first root found on it, with its witness.
#[derive(Debug, Clone)]
pub struct RayEntry<K: Scalar> {
    /// Positive representative: the first root found on this ray.
    pub rep: Vec<K>,
    /// Coroot of `rep`, over the simple-coroot basis.
    pub coroot: Vec<K>,
    /// Witness word, reflections listed in application order.
    pub word: Vec<usize>,
    /// The simple root the witness is applied to.
    pub base: usize,
    /// Whether `apply_word(word, alpha_base)` is `-rep` rather than `rep`.
    pub negated: bool,
    /// Word length at which the ray was first reached.
    pub depth: usize,
}

#[derive(Debug, Clone)]
pub struct Snapshot<K: Scalar> {
    datum: RootDatum<K>,
    dual: RootDatum<K>,
    depth: usize,
    rays: Vec<RayEntry<K>>,
    key_index: HashMap<Vec<K>, usize>,
    complete: bool,
}

impl<K: Scalar> Snapshot<K> {
    pub fn datum(&self) -> &RootDatum<K> {
        &self.datum
    }

    pub fn dual_datum(&self) -> &RootDatum<K> {
        &self.dual
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Whether the orbit was exhausted before the depth bound, i.e. the
    /// fragment is the entire (finite) root system.
    pub fn complete(&self) -> bool {
        self.complete
    }

    pub fn rays(&self) -> &[RayEntry<K>] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &RayEntry<K> {
        &self.rays[i]
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    /// Canonical hash key of the ray through a positive vector.
    pub fn ray_key(coords: &[K]) -> Vec<K> {
        let unit = coords
            .iter()
            .find(|c| !c.is_zero())
            .expect("nonzero vector")
            .ray_unit();
        coords.iter().map(|c| c.div_unit(&unit)).collect()
    }

    /// Index of the ray through `coords` (sign ignored), if present.
    pub fn find_ray(&self, coords: &[K]) -> Option<usize> {
        let (sign, pos) = classify(coords).ok()??;
        let _ = sign;
        self.key_index.get(&Self::ray_key(&pos)).copied()
    }

    /// Index plus the sign of `coords` relative to the stored positive rep.
    pub fn find_signed(&self, coords: &[K]) -> Option<(usize, Sign)> {
        let (sign, pos) = classify(coords).ok()??;
        let idx = self.key_index.get(&Self::ray_key(&pos)).copied()?;
        Some((idx, sign))
    }

    /// Rebuild a snapshot from exported parts, re-verifying every witness
    /// word; on failure returns the index of the offending ray.
    pub fn from_parts(
        datum: RootDatum<K>,
        depth: usize,
        complete: bool,
        rays: Vec<RayEntry<K>>,
    ) -> Result<Self, usize> {
        let dual = datum.dual();
        let mut key_index = HashMap::new();
        for (i, e) in rays.iter().enumerate() {
            key_index.insert(Self::ray_key(&e.rep), i);
        }
        let snap = Snapshot {
            datum,
            dual,
            depth,
            rays,
            key_index,
            complete,
        };
        for i in 0..snap.len() {
            if !snap.verify_witness(i) {
                return Err(i);
            }
        }
        Ok(snap)
    }

    /// Verify the ray's witness: the word re-applied to its base simple root
    /// must reproduce the representative (up to the recorded negation).
    pub fn verify_witness(&self, i: usize) -> bool {
        let e = &self.rays[i];
        let found = self.datum.apply_word(&e.word, &self.datum.simple_root(e.base));
        let expect: Vec<K> = if e.negated {
            e.rep.iter().map(|c| -c.clone()).collect()
        } else {
            e.rep.clone()
        };
        if found != expect {
            return false;
        }
        let cor = self.dual.apply_word(&e.word, &self.dual.simple_root(e.base));
        let cor_expect: Vec<K> = if e.negated {
            e.coroot.iter().map(|c| -c.clone()).collect()
        } else {
            e.coroot.clone()
        };
        cor == cor_expect
    }
}

/// Classify a vector as positive or negative; returns the sign and positive
/// version. `Ok(None)` for the zero vector.
#[allow(clippy::type_complexity)]
fn classify<K: Scalar>(coords: &[K]) -> Result<Option<(Sign, Vec<K>)>, EnumerateError> {
    let mut has_pos = false;
    let mut has_neg = false;
    for c in coords {
        match c.try_sign() {
            Some(Sign::Plus) => has_pos = true,
            Some(Sign::Minus) => has_neg = true,
            Some(Sign::Zero) => {}
            None => {
                return Err(EnumerateError::SignUndecidable {
                    coords: coords.iter().map(|c| c.to_string()).collect(),
                })
            }
        }
    }
    match (has_pos, has_neg) {
        (false, false) => Ok(None),
        (true, false) => Ok(Some((Sign::Plus, coords.to_vec()))),
        (false, true) => Ok(Some((
            Sign::Minus,
            coords.iter().map(|c| -c.clone()).collect(),
        ))),
        (true, true) => Err(EnumerateError::MixedSigns {
            coords: coords.iter().map(|c| c.to_string()).collect(),
        }),
    }
}

/// Breadth-first orbit of the simple roots to word length <= `depth`.
pub fn enumerate_roots<K: Scalar>(
    datum: &RootDatum<K>,
    depth: usize,
) -> Result<Snapshot<K>, EnumerateError> {
    enumerate_roots_capped(datum, depth, usize::MAX)
        .map(|(snap, _)| snap)
}

/// As [`enumerate_roots`], but stops early once `max_rays` rays have been
/// collected (the BFS level in progress is finished so depths stay exact).
/// Returns the snapshot and whether the cap cut the enumeration short.
pub fn enumerate_roots_capped<K: Scalar>(
    datum: &RootDatum<K>,
    depth: usize,
    max_rays: usize,
) -> Result<(Snapshot<K>, bool), EnumerateError> {
    let dual = datum.dual();
    let n = datum.rank();
    let mut rays: Vec<RayEntry<K>> = Vec::new();
    let mut key_index: HashMap<Vec<K>, usize> = HashMap::new();
    for i in 0..n {
        let rep = datum.simple_root(i);
        let coroot = dual.simple_root(i);
        key_index.insert(Snapshot::<K>::ray_key(&rep), rays.len());
        rays.push(RayEntry {
            rep,
            coroot,
            word: vec![],
            base: i,
            negated: false,
            depth: 0,
        });
    }
    let mut frontier: Vec<usize> = (0..n).collect();
    let mut capped = false;
    let mut exhausted = false;
    'levels: for level in 1..=depth {
        let mut next = Vec::new();
        for &r in &frontier {
            for p in 0..n {
                let y = datum.reflect_simple(p, &rays[r].rep);
                let Some((sign, pos)) = classify(&y)? else {
                    continue;
                };
                let key = Snapshot::<K>::ray_key(&pos);
                if key_index.contains_key(&key) {
                    continue;
                }
                let y_cor = dual.reflect_simple(p, &rays[r].coroot);
                let coroot = if sign == Sign::Minus {
                    y_cor.iter().map(|c| -c.clone()).collect()
                } else {
                    y_cor
                };
                let mut word = rays[r].word.clone();
                word.push(p);
                let negated = rays[r].negated ^ (sign == Sign::Minus);
                key_index.insert(key, rays.len());
                next.push(rays.len());
                rays.push(RayEntry {
                    rep: pos,
                    coroot,
                    word,
                    base: rays[r].base,
                    negated,
                    depth: level,
                });
            }
        }
        frontier = next;
        if frontier.is_empty() {
            exhausted = true;
            break;
        }
        if rays.len() >= max_rays {
            capped = level < depth;
            break 'levels;
        }
    }
    if depth == 0 {
        exhausted = n == 0;
    }
    Ok((
        Snapshot {
            datum: datum.clone(),
            dual,
            depth,
            rays,
            key_index,
            complete: exhausted && !capped,
        },
        capped,
    ))
}

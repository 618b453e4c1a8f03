//! The four oriented-matroid axioms for an involuted set with a closure
//! operator, checked by exhaustion on small ground sets:
//!   (1) finite support — automatic here,
//!   (2) cx(X)* = cx(X*),
//!   (3) x in cx(X ∪ {x*}) implies x in cx(X),
//!   (4) x in cx(X ∪ {y*}) and x not in cx(X) imply
//!       y in cx((X \ {y}) ∪ {x*}),
//! together with the closure-operator laws (extensive, monotone,
//! idempotent).

use std::collections::HashMap;

use crate::rootsys::Snapshot;
use crate::scalars::OrderedScalar;

use super::simplex::cone_member;

/// A finite set `{0, .., size-1}` with a fixed-point-free involution.
#[derive(Debug, Clone)]
pub struct InvolutedSet {
    size: usize,
    star: Vec<usize>,
}

impl InvolutedSet {
    pub fn new(star: Vec<usize>) -> Result<Self, String> {
        let size = star.len();
        for (x, &sx) in star.iter().enumerate() {
            if sx >= size {
                return Err(format!("star({x}) = {sx} out of range"));
            }
            if sx == x {
                return Err(format!("involution has a fixed point at {x}"));
            }
            if star[sx] != x {
                return Err(format!("star is not an involution at {x}"));
            }
        }
        Ok(InvolutedSet { size, star })
    }

    /// `2m` elements with `2i <-> 2i+1` paired.
    pub fn signed_pairs(m: usize) -> Self {
        let star = (0..2 * m).map(|x| x ^ 1).collect();
        InvolutedSet { size: 2 * m, star }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn star(&self, x: usize) -> usize {
        self.star[x]
    }

    fn star_mask(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        for x in 0..self.size {
            if mask & (1 << x) != 0 {
                out |= 1 << self.star[x];
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    NotExtensive { set: u64 },
    NotMonotone { set: u64, superset: u64 },
    NotIdempotent { set: u64 },
    StarCommutation { set: u64 },
    Elimination { x: usize, set: u64 },
    Exchange { x: usize, y: usize, set: u64 },
}

#[derive(Debug, Clone)]
pub struct AxiomsReport {
    pub ground_size: usize,
    pub subsets_checked: usize,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomsReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Exhaustively check the axioms; the ground set must stay small.
pub fn om_axioms_check(
    set: &InvolutedSet,
    mut closure: impl FnMut(u64) -> u64,
) -> AxiomsReport {
    let n = set.size();
    assert!(n <= 20, "exhaustive axiom check limited to 20 elements");
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo: HashMap<u64, u64> = HashMap::new();
    let mut cx = |mask: u64, memo: &mut HashMap<u64, u64>| -> u64 {
        if let Some(&v) = memo.get(&mask) {
            return v;
        }
        let v = closure(mask) & full;
        memo.insert(mask, v);
        v
    };
    let mut violations = Vec::new();
    let count = 1usize << n;
    for mask in 0..count as u64 {
        let c = cx(mask, &mut memo);
        if mask & !c != 0 {
            violations.push(AxiomViolation::NotExtensive { set: mask });
        }
        if cx(c, &mut memo) != c {
            violations.push(AxiomViolation::NotIdempotent { set: mask });
        }
        // monotone under single-element growth implies monotone
        for e in 0..n {
            let bigger = mask | (1 << e);
            if bigger != mask && c & !cx(bigger, &mut memo) != 0 {
                violations.push(AxiomViolation::NotMonotone {
                    set: mask,
                    superset: bigger,
                });
            }
        }
        // (2) star commutes with closure
        if set.star_mask(c) != cx(set.star_mask(mask), &mut memo) {
            violations.push(AxiomViolation::StarCommutation { set: mask });
        }
        // (3) elimination of x*
        for x in 0..n {
            let with_star = mask | (1 << set.star(x));
            if cx(with_star, &mut memo) & (1 << x) != 0 && c & (1 << x) == 0 {
                violations.push(AxiomViolation::Elimination { x, set: mask });
            }
        }
        // (4) exchange
        for x in 0..n {
            if c & (1 << x) != 0 {
                continue;
            }
            for y in 0..n {
                let with_ystar = mask | (1 << set.star(y));
                if cx(with_ystar, &mut memo) & (1 << x) == 0 {
                    continue;
                }
                let swapped = (mask & !(1 << y)) | (1 << set.star(x));
                if cx(swapped, &mut memo) & (1 << y) == 0 {
                    violations.push(AxiomViolation::Exchange { x, y, set: mask });
                }
            }
        }
    }
    AxiomsReport {
        ground_size: n,
        subsets_checked: count,
        violations,
    }
}

/// Signed ground set and induced cone-closure of a snapshot restriction:
/// element `2i` is `+ray[i]`, element `2i+1` is `-ray[i]`.
pub fn snapshot_cone_closure<K: OrderedScalar>(
    snapshot: &Snapshot<K>,
    rays: &[usize],
) -> (InvolutedSet, impl FnMut(u64) -> u64) {
    let set = InvolutedSet::signed_pairs(rays.len());
    let vectors: Vec<Vec<K>> = rays
        .iter()
        .flat_map(|&r| {
            let rep = snapshot.ray(r).rep.clone();
            let neg = rep.iter().map(|c| -c.clone()).collect::<Vec<_>>();
            [rep, neg]
        })
        .collect();
    let closure = move |mask: u64| -> u64 {
        let gens: Vec<Vec<K>> = (0..vectors.len())
            .filter(|&e| mask & (1 << e) != 0)
            .map(|e| vectors[e].clone())
            .collect();
        let mut out = 0u64;
        for (e, v) in vectors.iter().enumerate() {
            if mask & (1 << e) != 0 {
                out |= 1 << e;
            } else if cone_member(v, &gens).is_member() {
                out |= 1 << e;
            }
        }
        out
    };
    (set, closure)
}

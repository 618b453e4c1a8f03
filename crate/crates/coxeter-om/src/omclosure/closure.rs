//! Cone closure and 2-closure on finite snapshot fragments, and biclosed
//! testing. Verdicts on fragments carry an explicit contamination flag when
//! the enumeration boundary was touched; they are never silently coerced.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::linalg::solve_rank2;
use crate::rootsys::Snapshot;
use crate::scalars::{OrderedScalar, Sign};

use super::simplex::{cone_member, ConeCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosureKind {
    Cone,
    Two,
}

/// Result of closing a set inside a fragment.
#[derive(Debug, Clone)]
pub struct ClosureReport {
    pub input: Vec<usize>,
    pub closed: Vec<usize>,
    /// Some added ray sits at the enumeration depth bound, so the closure
    /// may be incomplete at this depth.
    pub contaminated: bool,
}

fn contamination<K: OrderedScalar>(snapshot: &Snapshot<K>, added: &[usize]) -> bool {
    added
        .iter()
        .any(|&r| snapshot.ray(r).depth == snapshot.depth())
}

/// `cone(set) ∩ fragment`: a single pass suffices because new members are
/// already nonnegative combinations of the input.
pub fn cone_closure<K: OrderedScalar>(snapshot: &Snapshot<K>, set: &[usize]) -> ClosureReport {
    let gens: Vec<Vec<K>> = set.iter().map(|&r| snapshot.ray(r).rep.clone()).collect();
    let mut in_set = vec![false; snapshot.len()];
    for &r in set {
        in_set[r] = true;
    }
    let mut closed: Vec<usize> = set.to_vec();
    let mut added = Vec::new();
    for r in 0..snapshot.len() {
        if in_set[r] {
            continue;
        }
        if cone_member(&snapshot.ray(r).rep, &gens).is_member() {
            closed.push(r);
            added.push(r);
        }
    }
    closed.sort_unstable();
    ClosureReport {
        input: set.to_vec(),
        closed,
        contaminated: contamination(snapshot, &added),
    }
}

/// Is `x` in the planar nonnegative span of rays `a`, `b`?
fn in_pair_cone<K: OrderedScalar>(snapshot: &Snapshot<K>, a: usize, b: usize, x: usize) -> bool {
    if x == a || x == b {
        return true;
    }
    match solve_rank2(
        &snapshot.ray(a).rep,
        &snapshot.ray(b).rep,
        &snapshot.ray(x).rep,
    ) {
        Some((p, q)) => p.sign() != Sign::Minus && q.sign() != Sign::Minus,
        None => false,
    }
}

/// Least fixpoint of adding, for every pair of members, the fragment rays
/// in their two-dimensional nonnegative span. Worklist over pairs: each
/// unordered pair of members is scanned exactly once.
pub fn two_closure<K: OrderedScalar>(snapshot: &Snapshot<K>, set: &[usize]) -> ClosureReport {
    let mut in_set = vec![false; snapshot.len()];
    for &r in set {
        in_set[r] = true;
    }
    let mut members: Vec<usize> = set.to_vec();
    let mut added = Vec::new();
    // pairs (ai, bi) with bi < ai still to scan, by position in `members`
    let mut next_pair = 0usize;
    while next_pair < members.len() {
        let ai = next_pair;
        next_pair += 1;
        for bi in 0..ai {
            let (a, b) = (members[ai], members[bi]);
            for x in 0..snapshot.len() {
                if in_set[x] {
                    continue;
                }
                if in_pair_cone(snapshot, a, b, x) {
                    in_set[x] = true;
                    members.push(x);
                    added.push(x);
                }
            }
        }
    }
    members.sort_unstable();
    ClosureReport {
        input: set.to_vec(),
        closed: members,
        contaminated: contamination(snapshot, &added),
    }
}

pub fn closure<K: OrderedScalar>(
    snapshot: &Snapshot<K>,
    set: &[usize],
    kind: ClosureKind,
) -> ClosureReport {
    match kind {
        ClosureKind::Cone => cone_closure(snapshot, set),
        ClosureKind::Two => two_closure(snapshot, set),
    }
}

/// Verdict of a biclosed test on a fragment.
#[derive(Debug, Clone)]
pub enum BiclosedVerdict<K: OrderedScalar> {
    /// Both sides closed; `contaminated` is set when the ambient set
    /// touches the enumeration boundary of an unexhausted orbit, making the
    /// verdict "biclosed at this depth" rather than unconditional.
    Biclosed { contaminated: bool },
    /// A witness ray in the closure of one side but lying on the other.
    NotBiclosed {
        witness: usize,
        witness_in_set: bool,
        certificate: ConeCertificate<K>,
        generators: Vec<usize>,
    },
}

impl<K: OrderedScalar> BiclosedVerdict<K> {
    pub fn is_biclosed(&self) -> bool {
        matches!(self, BiclosedVerdict::Biclosed { .. })
    }
}

/// Test whether `set` is closed and `positives \ set` is closed, under the
/// chosen closure operator, inside the sub-fragment `positives`.
pub fn is_biclosed<K: OrderedScalar>(
    snapshot: &Snapshot<K>,
    set: &[usize],
    positives: &[usize],
    kind: ClosureKind,
) -> BiclosedVerdict<K> {
    let mut in_set: HashMap<usize, bool> = HashMap::new();
    for &r in positives {
        in_set.insert(r, false);
    }
    for &r in set {
        assert!(
            in_set.insert(r, true).is_some(),
            "set must be contained in positives"
        );
    }
    match kind {
        ClosureKind::Cone => {
            for inside in [true, false] {
                let gens_idx: Vec<usize> = positives
                    .iter()
                    .copied()
                    .filter(|r| in_set[r] == inside)
                    .collect();
                let gens: Vec<Vec<K>> =
                    gens_idx.iter().map(|&r| snapshot.ray(r).rep.clone()).collect();
                for &x in positives.iter().filter(|r| in_set[r] != inside) {
                    let cert = cone_member(&snapshot.ray(x).rep, &gens);
                    if cert.is_member() {
                        return BiclosedVerdict::NotBiclosed {
                            witness: x,
                            witness_in_set: in_set[&x],
                            certificate: cert,
                            generators: gens_idx,
                        };
                    }
                }
            }
        }
        ClosureKind::Two => {
            if let Some((x, a, b)) = two_closure_violation(snapshot, positives, &in_set) {
                let gens: Vec<Vec<K>> = vec![
                    snapshot.ray(a).rep.clone(),
                    snapshot.ray(b).rep.clone(),
                ];
                let cert = cone_member(&snapshot.ray(x).rep, &gens);
                debug_assert!(cert.is_member());
                return BiclosedVerdict::NotBiclosed {
                    witness: x,
                    witness_in_set: in_set[&x],
                    certificate: cert,
                    generators: vec![a, b],
                };
            }
        }
    }
    let contaminated = !snapshot.complete()
        && positives
            .iter()
            .any(|&r| snapshot.ray(r).depth == snapshot.depth());
    BiclosedVerdict::Biclosed { contaminated }
}

/// Find a 2-closure biclosedness violation by grouping rays into coplanar
/// classes. Within one plane the positive rays sit in an open half-plane,
/// so the cross-product comparator orders them by angle, `x in cone(a, b)`
/// means "between", and both sides are closed iff membership switches at
/// most once along the order.
fn two_closure_violation<K: OrderedScalar>(
    snapshot: &Snapshot<K>,
    positives: &[usize],
    in_set: &HashMap<usize, bool>,
) -> Option<(usize, usize, usize)> {
    for class in coplanar_classes(snapshot, positives) {
        let ordered = sort_in_plane(snapshot, &class);
        let flags: Vec<bool> = ordered.iter().map(|r| in_set[r]).collect();
        let switches = flags.windows(2).filter(|w| w[0] != w[1]).count();
        if switches <= 1 {
            continue;
        }
        // locate x strictly between two same-side rays of the other side
        for side in [true, false] {
            let positions: Vec<usize> = (0..ordered.len()).filter(|&i| flags[i] == side).collect();
            if positions.len() < 2 {
                continue;
            }
            let (first, last) = (positions[0], *positions.last().unwrap());
            if let Some(mid) = (first + 1..last).find(|&i| flags[i] != side) {
                return Some((ordered[mid], ordered[first], ordered[last]));
            }
        }
    }
    None
}

/// Group the given rays into maximal coplanar classes (planes holding at
/// least three of them), via canonical Plücker keys of ray pairs.
pub fn coplanar_classes<K: OrderedScalar>(
    snapshot: &Snapshot<K>,
    rays: &[usize],
) -> Vec<Vec<usize>> {
    let mut planes: HashMap<Vec<K>, Vec<usize>> = HashMap::new();
    for (ai, &a) in rays.iter().enumerate() {
        for &b in rays.iter().skip(ai + 1) {
            let key = plucker_key(&snapshot.ray(a).rep, &snapshot.ray(b).rep);
            let entry = planes.entry(key).or_default();
            if !entry.contains(&a) {
                entry.push(a);
            }
            if !entry.contains(&b) {
                entry.push(b);
            }
        }
    }
    planes.into_values().filter(|c| c.len() >= 3).collect()
}

fn plucker_key<K: OrderedScalar>(a: &[K], b: &[K]) -> Vec<K> {
    let d = a.len();
    let mut p = Vec::with_capacity(d * (d - 1) / 2);
    for r in 0..d {
        for s in r + 1..d {
            p.push(a[r].clone() * b[s].clone() - a[s].clone() * b[r].clone());
        }
    }
    let unit = p
        .iter()
        .find(|c| !c.is_zero())
        .expect("independent rays")
        .clone();
    p.iter()
        .map(|c| c.exact_div(&unit).expect("field division"))
        .collect()
}

fn sort_in_plane<K: OrderedScalar>(snapshot: &Snapshot<K>, class: &[usize]) -> Vec<usize> {
    let e1 = snapshot.ray(class[0]).rep.clone();
    let e2 = class[1..]
        .iter()
        .map(|&r| snapshot.ray(r).rep.clone())
        .find(|v| !crate::linalg::proportional(&e1, v))
        .expect("a plane class spans two dimensions");
    let mut with_coords: Vec<(usize, (K, K))> = class
        .iter()
        .map(|&r| {
            let (p, q) = solve_rank2(&e1, &e2, &snapshot.ray(r).rep)
                .expect("class members lie in the plane");
            (r, (p, q))
        })
        .collect();
    with_coords.sort_by(|(_, (xa, ya)), (_, (xb, yb))| {
        // cross product sign: positive rays of a pointed cone fill an open
        // half-plane, so this comparator is a strict total order
        let cross = xa.clone() * yb.clone() - xb.clone() * ya.clone();
        match cross.sign() {
            Sign::Plus => std::cmp::Ordering::Less,
            Sign::Minus => std::cmp::Ordering::Greater,
            Sign::Zero => std::cmp::Ordering::Equal,
        }
    });
    with_coords.into_iter().map(|(r, _)| r).collect()
}

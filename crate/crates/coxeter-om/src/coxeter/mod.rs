//! Coxeter matrices, Coxeter graphs, and non-integral generalized Cartan
//! matrices (NGCMs) with validation, rescaling, and homotopy paths.

mod homotopy;
mod ngcm;
mod rescale;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use homotopy::{
    certify_interval_ngcm, homotopy_entry_interval, ngcm_homotopy_exact, ngcm_homotopy_interval,
    HomotopyError,
};
pub use ngcm::{ngcm_det, validate_ngcm, Ngcm, NgcmViolation};
pub use rescale::{symmetrize_forest, RescalingDiag, SymmetrizeError};

/// A bond label `m(rs)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoxLabel {
    Finite(u32),
    Infinite,
}

impl fmt::Display for CoxLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxLabel::Finite(m) => write!(f, "{m}"),
            CoxLabel::Infinite => f.write_str("inf"),
        }
    }
}

/// A symmetric Coxeter matrix: `m[r][r] = 1`, `m[r][s] = m[s][r] >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterMatrix {
    labels: Vec<Vec<CoxLabel>>,
}

impl CoxeterMatrix {
    pub fn new(labels: Vec<Vec<CoxLabel>>) -> Result<Self, String> {
        let n = labels.len();
        for (r, row) in labels.iter().enumerate() {
            if row.len() != n {
                return Err("Coxeter matrix must be square".into());
            }
            for (s, &m) in row.iter().enumerate() {
                if r == s && m != CoxLabel::Finite(1) {
                    return Err(format!("m[{r}][{r}] must be 1"));
                }
                if r != s {
                    if let CoxLabel::Finite(k) = m {
                        if k < 2 {
                            return Err(format!("m[{r}][{s}] must be >= 2"));
                        }
                    }
                    if m != labels[s][r] {
                        return Err(format!("Coxeter matrix must be symmetric at ({r},{s})"));
                    }
                }
            }
        }
        Ok(CoxeterMatrix { labels })
    }

    /// Build from the strictly-upper-triangular labels, row by row.
    pub fn from_upper(rank: usize, upper: &[CoxLabel]) -> Self {
        assert_eq!(upper.len(), rank * (rank - 1) / 2);
        let mut labels = vec![vec![CoxLabel::Finite(1); rank]; rank];
        let mut it = upper.iter();
        for r in 0..rank {
            for s in r + 1..rank {
                let m = *it.next().unwrap();
                labels[r][s] = m;
                labels[s][r] = m;
            }
        }
        CoxeterMatrix { labels }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, r: usize, s: usize) -> CoxLabel {
        self.labels[r][s]
    }

    pub fn graph(&self) -> CoxeterGraph {
        let mut edges = Vec::new();
        for r in 0..self.rank() {
            for s in r + 1..self.rank() {
                match self.label(r, s) {
                    CoxLabel::Finite(m) if m >= 3 => edges.push((r, s, CoxLabel::Finite(m))),
                    CoxLabel::Infinite => edges.push((r, s, CoxLabel::Infinite)),
                    _ => {}
                }
            }
        }
        CoxeterGraph {
            rank: self.rank(),
            edges,
        }
    }

    pub fn has_infinite_bond(&self) -> bool {
        self.labels
            .iter()
            .flatten()
            .any(|m| *m == CoxLabel::Infinite)
    }
}

/// The Coxeter graph: vertices are simple-root indices, edges the pairs
/// with `m(rs) >= 3`, labelled by the bond order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterGraph {
    rank: usize,
    edges: Vec<(usize, usize, CoxLabel)>,
}

impl CoxeterGraph {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn edges(&self) -> &[(usize, usize, CoxLabel)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b, _) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out
    }

    /// Acyclicity check by union-find.
    pub fn is_forest(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.rank).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b, _) in &self.edges {
            let ra = find(&mut parent, a);
            let rb = find(&mut parent, b);
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }

    /// Connected components, each sorted ascending.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.rank];
        let mut comps = Vec::new();
        for start in 0..self.rank {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

#[cfg(test)]
mod tests;

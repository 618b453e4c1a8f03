//! Rescaling diagonals and forest symmetrization.
//!
//! Replacing each simple root `alpha` by `d_alpha * alpha` (and the coroot
//! by `d_alpha^{-1} alpha^vee`) with `d_alpha > 0` leaves the induced
//! oriented matroid unchanged; when the Coxeter graph is a forest, the
//! diagonal can be chosen to make the NGCM symmetric.


use thiserror::Error;

use crate::scalars::Scalar;

use super::Ngcm;

/// A positive rescaling diagonal, one factor per simple root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RescalingDiag<K: Scalar> {
    d: Vec<K>,
}

impl<K: Scalar> RescalingDiag<K> {
    pub fn new(d: Vec<K>) -> Self {
        RescalingDiag { d }
    }

    pub fn identity(rank: usize) -> Self {
        RescalingDiag {
            d: vec![K::one(); rank],
        }
    }

    pub fn factors(&self) -> &[K] {
        &self.d
    }

    /// Composition acts multiplicatively.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.d.len(), other.d.len());
        RescalingDiag {
            d: self
                .d
                .iter()
                .zip(&other.d)
                .map(|(a, b)| a.clone() * b.clone())
                .collect(),
        }
    }

    /// The rescaled NGCM: `c'[a][b] = (d_a / d_b) * c[a][b]`. The Coxeter
    /// matrix is unchanged because products are preserved.
    pub fn apply(&self, ngcm: &Ngcm<K>) -> Ngcm<K> {
        let n = ngcm.rank();
        assert_eq!(self.d.len(), n);
        let entries: Vec<Vec<K>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (self.d[i].clone() * ngcm.entry(i, j).clone())
                            .exact_div(&self.d[j])
                            .expect("rescaling factors are invertible")
                    })
                    .collect()
            })
            .collect();
        Ngcm::from_parts_unchecked(entries, ngcm.cox().clone())
    }
}

#[derive(Debug, Clone, Error)]
pub enum SymmetrizeError {
    #[error("Coxeter graph is not a forest; symmetrization requires acyclicity")]
    NotAForest,
    #[error("square root of {radicand} (edge {i}-{j}) escapes the active tower; extend the tower or use interval mode")]
    SqrtEscapesTower { i: usize, j: usize, radicand: String },
}

/// Symmetrize a forest NGCM by rescaling. Walks each tree from its
/// lowest-index vertex and sets `d_child = d_parent * sqrt(c[parent][child]
/// / c[child][parent])` along tree edges.
pub fn symmetrize_forest<K: Scalar>(ngcm: &Ngcm<K>) -> Result<RescalingDiag<K>, SymmetrizeError> {
    let graph = ngcm.cox().graph();
    if !graph.is_forest() {
        return Err(SymmetrizeError::NotAForest);
    }
    let n = ngcm.rank();
    let mut d = vec![K::one(); n];
    for comp in graph.components() {
        // designated tree root: lowest index in the component
        let root = comp[0];
        let mut stack = vec![root];
        let mut seen = vec![false; n];
        seen[root] = true;
        while let Some(parent) = stack.pop() {
            for child in graph.neighbors(parent) {
                if seen[child] {
                    continue;
                }
                seen[child] = true;
                let ratio = ngcm
                    .entry(parent, child)
                    .exact_div(ngcm.entry(child, parent))
                    .expect("edge entries are nonzero");
                let root_val = ratio.try_sqrt().ok_or_else(|| {
                    SymmetrizeError::SqrtEscapesTower {
                        i: parent,
                        j: child,
                        radicand: ratio.to_string(),
                    }
                })?;
                d[child] = d[parent].clone() * root_val;
                stack.push(child);
            }
        }
    }
    Ok(RescalingDiag::new(d))
}

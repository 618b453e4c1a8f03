//! Realized root system data: reflection actions, word application, bounded
//! enumeration of roots with word witnesses, and the transfer to the
//! abstract root system `T x {±1}`.

mod snapshot;
mod transfer;

use crate::coxeter::Ngcm;
use crate::scalars::Scalar;

pub use snapshot::{enumerate_roots, enumerate_roots_capped, EnumerateError, RayEntry, Snapshot};
pub use transfer::{
    abstract_transfer, dihedral_span_roots, reference_realization, AbstractRoot, RefDatum, RefKey,
    SpanError,
};

/// A realized root system datum with linearly independent simple roots:
/// vectors are coordinate columns over the simple-root basis, so the datum
/// is determined by its NGCM.
#[derive(Debug, Clone)]
pub struct RootDatum<K: Scalar> {
    ngcm: Ngcm<K>,
}

impl<K: Scalar> RootDatum<K> {
    pub fn new(ngcm: Ngcm<K>) -> Self {
        RootDatum { ngcm }
    }

    pub fn rank(&self) -> usize {
        self.ngcm.rank()
    }

    pub fn ngcm(&self) -> &Ngcm<K> {
        &self.ngcm
    }

    /// The datum of the coroot side: pairing matrix transposed.
    pub fn dual(&self) -> RootDatum<K> {
        RootDatum {
            ngcm: self.ngcm.transposed(),
        }
    }

    pub fn simple_root(&self, i: usize) -> Vec<K> {
        let mut v = vec![K::zero(); self.rank()];
        v[i] = K::one();
        v
    }

    /// `(x, alpha_p^vee)` for `x` over the simple-root basis.
    pub fn pairing_with_simple_coroot(&self, x: &[K], p: usize) -> K {
        let mut acc = K::zero();
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                acc = acc + xi.clone() * self.ngcm.entry(i, p).clone();
            }
        }
        acc
    }

    /// Full pairing `(x, lambda)` with `lambda` over the simple-coroot basis.
    pub fn pairing(&self, x: &[K], coroot: &[K]) -> K {
        let mut acc = K::zero();
        for (j, lj) in coroot.iter().enumerate() {
            if !lj.is_zero() {
                acc = acc + self.pairing_with_simple_coroot(x, j) * lj.clone();
            }
        }
        acc
    }

    /// Simple reflection `s_p(x) = x - (x, alpha_p^vee) alpha_p`.
    pub fn reflect_simple(&self, p: usize, x: &[K]) -> Vec<K> {
        assert!(p < self.rank(), "simple index out of range");
        let c = self.pairing_with_simple_coroot(x, p);
        let mut y = x.to_vec();
        y[p] = y[p].clone() - c;
        y
    }

    /// Reflection in an arbitrary root given with its coroot vector:
    /// `s_beta(x) = x - (x, beta^vee) beta`.
    pub fn reflect_by(&self, root: &[K], coroot: &[K], x: &[K]) -> Vec<K> {
        let c = self.pairing(x, coroot);
        x.iter()
            .zip(root)
            .map(|(xi, bi)| xi.clone() - c.clone() * bi.clone())
            .collect()
    }

    /// Apply a word of simple reflections; the first letter acts first, so
    /// `apply_word(&[a, b], x) = s_b(s_a(x))` and the empty word is the
    /// identity.
    pub fn apply_word(&self, word: &[usize], x: &[K]) -> Vec<K> {
        let mut y = x.to_vec();
        for &p in word {
            y = self.reflect_simple(p, &y);
        }
        y
    }

    /// Matrix of the word's action, columns are images of the basis.
    pub fn word_matrix(&self, word: &[usize]) -> Vec<Vec<K>> {
        (0..self.rank())
            .map(|i| self.apply_word(word, &self.simple_root(i)))
            .collect()
    }
}

#[cfg(test)]
pub(crate) mod tests;

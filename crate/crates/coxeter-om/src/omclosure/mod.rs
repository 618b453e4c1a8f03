//! Oriented-matroid closure operators on finite fragments: cone closure
//! with exact feasibility certificates, the 2-closure, biclosed testing,
//! the closure axioms, and chirotope values.

mod axioms;
mod closure;
mod simplex;

use crate::linalg::det_of_columns;
use crate::rootsys::Snapshot;
use crate::scalars::{OrderedScalar, Sign};

pub use axioms::{
    om_axioms_check, snapshot_cone_closure, AxiomViolation, AxiomsReport, InvolutedSet,
};
pub use closure::{
    closure, cone_closure, coplanar_classes, is_biclosed, two_closure, BiclosedVerdict,
    ClosureKind, ClosureReport,
};
pub use simplex::{cone_member, ConeCertificate};

/// Chirotope value of a rank-sized tuple of snapshot rays: the exact sign
/// of the determinant of their representatives.
pub fn chirotope_full<K: OrderedScalar>(snapshot: &Snapshot<K>, tuple: &[usize]) -> Sign {
    let cols: Vec<Vec<K>> = tuple
        .iter()
        .map(|&r| snapshot.ray(r).rep.clone())
        .collect();
    chirotope_of_columns(&cols)
}

/// Chirotope value of explicit coordinate columns.
pub fn chirotope_of_columns<K: OrderedScalar>(cols: &[Vec<K>]) -> Sign {
    assert!(
        !cols.is_empty() && cols.len() == cols[0].len(),
        "tuple length must equal the rank"
    );
    det_of_columns(cols).sign()
}

#[cfg(test)]
mod tests;

//! Exact-arithmetic realized root systems of Coxeter groups and their
//! oriented-matroid data.
//!
//! The core is generic over an exact scalar tower ([`scalars::Scalar`]):
//! arbitrary-precision rationals, the quadratic extension `Q(sqrt 5)`
//! housing the golden ratio, and Laurent polynomials in `v` over `Q` for
//! the generic affine `Ã_n` representation. An interval-refined mode
//! certifies signs that escape the exact towers.
//!
//! Modules:
//! - [`scalars`]: the towers, certified signs, quantum integers `c_n`.
//! - [`coxeter`]: NGCM validation, Coxeter graphs, rescaling and forest
//!   symmetrization, homotopy paths through NGCM space.
//! - [`rootsys`]: reflection actions, bounded root enumeration with word
//!   witnesses, transfer to the abstract root system `T x {±1}`.
//! - [`affine`]: everything specific to type `Ã_n` — closed-form root
//!   indices, the symbolic reflection table, determinant factorization
//!   certificates, chirotope signs per regime of `v`.
//! - [`omclosure`]: cone closure with exact LP certificates, the
//!   2-closure, biclosed verdicts, the oriented-matroid axioms.
//! - [`verify`]: scenario runners with machine-checkable reports.
//! - [`io`]: the JSON interchange formats used by the CLI.

pub mod affine;
pub mod coxeter;
pub mod io;
pub mod linalg;
pub mod omclosure;
pub mod rootsys;
pub mod scalars;
pub mod verify;

pub use scalars::{LaurentPoly, Quad5, Rational, Sign, SignRegime};

/// NGCM over the rational tower.
pub type RationalNgcm = coxeter::Ngcm<Rational>;
/// NGCM over `Q(sqrt 5)`.
pub type Quad5Ngcm = coxeter::Ngcm<Quad5>;
/// NGCM over the Laurent tower (symbolic `v`).
pub type LaurentNgcm = coxeter::Ngcm<LaurentPoly>;

/// Root-system fragments per tower.
pub type RationalSnapshot = rootsys::Snapshot<Rational>;
pub type Quad5Snapshot = rootsys::Snapshot<Quad5>;
pub type LaurentSnapshot = rootsys::Snapshot<LaurentPoly>;

//! Exact computation of invariants of Brieskorn spheres and, more generally,
//! negative-definite Seifert fibered rational homology spheres.
//!
//! Everything here is integer or rational arithmetic — no floating point.
//! The main pipeline goes:
//!
//! 1. [`seifert`]: exponents `Sigma(a1,...,an)` -> Seifert invariants
//!    `M(e0; r1,...,rn)`,
//! 2. [`plumbing`]: Seifert invariants -> star-shaped plumbing graph and its
//!    intersection lattice (exact determinants, inverses, definiteness),
//! 3. [`contact`]: counts of tight fillable contact structures and the
//!    `d3` invariant of the canonical one,
//! 4. [`correction`]: the Heegaard Floer correction term `d` via the
//!    Ozsváth–Szabó full-path algorithm on characteristic vectors,
//! 5. [`diophantine`]: the enumeration problems whose solutions are exactly
//!    the manifolds where `d3` of the distinguished structure vanishes,
//! 6. [`classify`]: ties it together into reports, the reference table, and
//!    the exhaustive small-manifold search.

pub mod classify;
pub mod contact;
pub mod correction;
pub mod diophantine;
pub mod error;
pub mod exact;
pub mod plumbing;
pub mod seifert;

pub use error::{Error, Result};
pub use exact::Rational;

//! Error type shared by the whole crate.
//!
//! `Error` is `Clone` on purpose: plumbing graphs cache the result of the
//! (expensive) exact matrix inversion, including a failed one, so the cached
//! error has to be handed out by value on every later call.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the domain of the requested operation
    /// (non-coprime exponents, zero denominator, unsolvable congruence, ...).
    #[error("invalid input: {0}")]
    Domain(String),

    /// The operation is well-defined but intentionally declines this case;
    /// the message says where the case is handled instead.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// The intersection form is singular, so it has no inverse.
    #[error("singular intersection form (determinant 0)")]
    SingularForm,

    /// A vector fails the characteristic condition `K(v) ≡ m(v) (mod 2)`.
    #[error("vector is not characteristic: entry {value} at vertex {vertex} has the wrong parity for framing {framing}")]
    Parity {
        vertex: usize,
        value: i64,
        framing: i64,
    },

    /// An exhaustive search was declined because the initial-vector count
    /// exceeds the caller's budget and no probed witness could be verified.
    #[error("search space of {required} initial vectors exceeds budget {budget} and no witness vector was verified")]
    BudgetExceeded { required: u128, budget: u64 },

    /// Malformed textual input (manifold names, vector files, JSON reports).
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal consistency assertion failed. This is a bug in the crate,
    /// not a property of the input.
    #[error("internal error: {0}")]
    Internal(String),
}

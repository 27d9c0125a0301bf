use thiserror::Error;

/// Errors reported by the library's fallible operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A ranking or axis was not a permutation of 1..=n.
    #[error("not a permutation of 1..={n}")]
    NotAPermutation { n: usize },

    /// An alternative or voter id fell outside 1..=n.
    #[error("id {id} out of range 1..={n}")]
    IdOutOfRange { id: usize, n: usize },

    /// Two objects that must share a size did not.
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    /// A profile must contain at least one voter.
    #[error("profile is empty")]
    EmptyProfile,

    /// A candidate tableau violated the staircase-shape or monotonicity rules.
    #[error("invalid tableau: {reason}")]
    InvalidTableau { reason: String },

    /// An argument was outside the operation's documented domain.
    #[error("invalid argument: {reason}")]
    InvalidArgument { reason: String },

    /// The input did not satisfy a documented precondition.
    #[error("precondition violated: {reason}")]
    PreconditionViolated { reason: String },

    /// The request exceeds the supported brute-force ceiling.
    #[error("n = {requested} exceeds the supported ceiling {ceiling}")]
    ResourceBound { requested: usize, ceiling: usize },

    /// An internal consistency check failed; this indicates a bug.
    #[error("internal invariant failed: {reason}")]
    Internal { reason: String },
}

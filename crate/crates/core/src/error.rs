use thiserror::Error;

/// Errors produced while analyzing weights or building diagrams.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient rank must be at least 2, got {0}")]
    InvalidRank(usize),

    /// A coordinate occurs three or more times; no Levi-regular conjugate exists.
    #[error("coordinate {value} occurs {count} times; at most two occurrences are allowed")]
    SingularityTooDeep { value: i64, count: usize },

    /// More repeated pairs than the first block can absorb.
    #[error("singularity order {l} exceeds k = {k}; the orbit of Levi-regular conjugates is empty")]
    NoRegularConjugate { l: usize, k: usize },

    #[error("invalid orbit element: {0}")]
    InvalidOrbitElement(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A structural law failed; this signals a bug, not a user error.
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

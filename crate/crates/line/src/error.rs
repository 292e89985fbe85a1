use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LineError {
    /// A pattern or progression length below 2 was requested.
    #[error("pattern arity must be at least 2, got {k}")]
    BadArity { k: u64 },
    /// A subset's size does not match the decomposition it is checked against.
    #[error("subset of size {subset} does not fit a {blocks}-block decomposition (need blocks + 1 points)")]
    ArityMismatch { subset: usize, blocks: usize },
    /// Duplicate point in a set that must be multiplicity-free.
    #[error("duplicate point {0} in point set")]
    DuplicatePoint(String),
    /// A generator or operation was called with parameters it cannot satisfy.
    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),
}

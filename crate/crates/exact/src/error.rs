use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExactError {
    /// Two coincident points were given where a proper pair is required.
    #[error("degenerate pair: the two points coincide")]
    DegeneratePair,
    /// A pair was passed in the wrong order for an order-sensitive operation.
    #[error("points are not in the required order")]
    NotOrdered,
    /// An approximate direction comparison could not be decided within tolerance.
    #[error("ambiguous comparison under approximate direction (margin {margin:.3e} below tolerance {tolerance:.3e})")]
    AmbiguousComparison { margin: f64, tolerance: f64 },
    /// A vector supplied as an exact direction does not have unit modulus.
    #[error("direction vector is not a unit vector")]
    NotUnit,
    /// The zero vector spans no direction.
    #[error("direction vector must be nonzero")]
    ZeroVector,
    /// Division by zero in the field.
    #[error("division by zero")]
    DivisionByZero,
}

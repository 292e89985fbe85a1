use patterncount_exact::ExactError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PlaneError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    /// Duplicate point on ingestion; duplicates are an error, never merged.
    #[error("duplicate point {0} in point set")]
    DuplicatePoint(String),
    /// The two independent counting routes disagree. Must never fire.
    #[error("counting methods disagree: third-vertex route {pairs}, reconstruction route {reconstruction}")]
    MethodMismatch { pairs: u64, reconstruction: u64 },
    #[error("operation needs a nonempty point set")]
    EmptySet,
    /// The concurrency search found no admissible direction. Must never fire
    /// for valid input; carries diagnostics about the failed scan.
    #[error("no concurrency sign change found: {0}")]
    NoSignChange(String),
    /// A median could not be certified under an approximate direction.
    #[error("median verification failed under approximate direction")]
    MedianVerification,
    /// A combinatorial invariant failed under tolerance arithmetic.
    #[error("tolerance pathology: {0}")]
    ToleranceViolation(String),
}

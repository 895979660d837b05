//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by the exact geometric kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("coordinate magnitude {0} exceeds the supported limit")]
    CoordinateOverflow(i64),
}

/// Errors raised while validating or building point sets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("point set must contain pairwise distinct points (indices {0} and {1} coincide)")]
    DuplicatePoint(usize, usize),
    #[error("coordinate magnitude {0} exceeds the supported limit")]
    CoordinateOverflow(i64),
    #[error("point set is empty")]
    Empty,
    #[error("{0}")]
    Parse(String),
}

/// Errors raised by the equitable partition search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition requires an even number of points, got {0}")]
    OddSize(usize),
    #[error("partition requires at least 4 points, got {0}")]
    TooSmall(usize),
    #[error("{0}")]
    InvalidInput(InputError),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

/// Errors raised by quadruple classification and quadrant predicates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadrupleError {
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

/// Errors raised by the tour construction pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TourError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported size n = {0}: tours are constructed for even n >= 20; use the oracle for n <= 12")]
    UnsupportedSize(usize),
    #[error("parity mismatch in alternating path: {0}")]
    ParityMismatch(String),
    #[error("internal invariant violated: {0}\ndiagnostics:\n{1}")]
    InternalInvariant(String, String),
}

/// Errors raised by the exhaustive small-instance oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle supports 3 <= n <= 12, got {0}")]
    UnsupportedSize(usize),
    #[error("coordinate span {0} exceeds the oracle limit {1}")]
    SpanTooLarge(i64, i64),
}

/// Errors raised by tour and path verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("order length {got} does not match point count {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("order contains out-of-range index {0}")]
    IndexOutOfRange(usize),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
}

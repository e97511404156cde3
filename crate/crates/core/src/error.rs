use thiserror::Error;

/// Errors raised by the algebra, representation and spinor operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid signature ({plus},{minus}): {reason}")]
    InvalidSignature {
        plus: usize,
        minus: usize,
        reason: &'static str,
    },
    #[error("signature mismatch: expected Cl({expected}), found Cl({found})")]
    SignatureMismatch { expected: String, found: String },
    #[error("coefficient vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("non-finite coefficient at blade index {0}")]
    NonFinite(usize),
    #[error("grade {grade} out of range for an algebra of dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },
    #[error("expected a grade-1 element")]
    NotAVector,
    #[error("null vector (|v²| = {0:e}) has no inverse")]
    NullVector(f64),
    #[error("square of the exponent is not a scalar (non-scalar residual {0:e})")]
    NonScalarSquare(f64),
    #[error("generator {0} has no image under the requested remapping")]
    UnmappedGenerator(usize),
    #[error("point is the projection pole (1 + e0·a = {0:e})")]
    PoleSingularity(f64),
    #[error("point violates the domain: {0}")]
    DomainViolation(String),
    #[error("element is not in the spinor ideal (residual {0:e})")]
    NotInIdeal(f64),
    #[error("degenerate spinor state: {0}")]
    DegenerateState(&'static str),
    #[error("spinor norm² = {0:e} is not positive")]
    NonTimelike(f64),
    #[error("algebra tag mismatch: {0}")]
    TagMismatch(String),
    #[error("quaternion q0 vanishes")]
    ZeroQ0,
    #[error("quaternion spinor is not orthogonal (<q0† q1>_0 = {0:e})")]
    NotOrthogonal(f64),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by ring, matrix, normal-form and witness operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring descriptor `{0}`")]
    InvalidRing(String),
    #[error("malformed literal `{literal}` for ring {ring}")]
    MalformedLiteral { ring: String, literal: String },
    #[error("literal `{literal}` belongs to a different ring kind than {ring}")]
    WrongRingKind { ring: String, literal: String },
    #[error("mixed-ring operands: `{0}` and `{1}`")]
    MixedRings(String, String),
    #[error("ring {0} is not Euclidean")]
    NotEuclidean(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not invertible: determinant {det} is not a unit")]
    NotInvertible { det: String },
    #[error("operation `{op}` is not supported over {ring}")]
    Unsupported { op: &'static str, ring: String },
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("malformed matrix text: {0}")]
    MalformedMatrix(String),
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("isotropy violated: {0}")]
    NotIsotropic(String),
    #[error("matrix does not preserve the {0} form")]
    NotFormPreserving(&'static str),
    #[error("matrix is not of stabilizer shape (first column must be e1)")]
    NotStabilizerShape,
    #[error("matrix does not fix the constraint vector g{0}*e1")]
    NotInIntersection(usize),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParam { name: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

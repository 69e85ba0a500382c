use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("incompatible characteristics: {0}")]
    IncompatibleCharacteristics(String),

    #[error("invalid characteristic: {0}")]
    InvalidCharacteristic(String),

    #[error("enumeration guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("genus mismatch: expected {expected}, found {found}")]
    GenusMismatch { expected: usize, found: usize },

    #[error("period matrix is not symmetric (max asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },

    #[error("imaginary part of the period matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),

    #[error("truncation radius {needed} exceeds the cap {cap}; imaginary part is close to degenerate")]
    RadiusOverflow { needed: usize, cap: usize },

    #[error("invalid evaluation config: {0}")]
    InvalidConfig(String),

    #[error("invalid branch set: {0}")]
    InvalidBranchSet(String),

    #[error("branch points must be real and strictly increasing for period computation")]
    NotRealSorted,

    #[error("quadrature did not converge within {nodes} nodes")]
    QuadratureNonConvergence { nodes: usize },

    #[error("index {index} out of range for genus {genus}")]
    IndexOutOfRange { index: usize, genus: usize },

    #[error("subset must have even cardinality, got {0}")]
    OddSubset(usize),

    #[error("characteristic for subset {0} has a vanishing theta-null")]
    VanishingCharacteristic(String),

    #[error("constraint violated: {0}")]
    ConstraintViolation(String),

    #[error("no admissible characteristics for this identity")]
    EmptyAdmissibleSet,

    #[error("theta-null test failed: {0}")]
    ThetaNullTestFailed(String),

    #[error("group structure invalid: {0}")]
    InvalidGroup(String),

    #[error("detection report is inconsistent: {0}")]
    InconsistentDetection(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

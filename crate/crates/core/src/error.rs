use thiserror::Error;

/// Errors produced by polynomial arithmetic, transforms, and certification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeroPair,

    #[error("{op} requires a nonconstant polynomial")]
    DegreeAtLeastOne { op: &'static str },

    #[error("real-rootedness undefined for 0")]
    ZeroPolynomial,

    #[error("polynomial degree {degree} exceeds transform capacity {max_degree}")]
    TransformCapacity { degree: usize, max_degree: usize },

    #[error(
        "composition capacity violation at k = {index}: inner image has degree {degree} \
         but the outer transform only covers degree {max_degree}"
    )]
    ComposeCapacity {
        index: usize,
        degree: usize,
        max_degree: usize,
    },

    #[error("sign variations are undefined at a root of the chain head")]
    EvaluationAtRoot,

    #[error("invalid interval: lower endpoint must be strictly below upper endpoint")]
    InvalidInterval,

    #[error("invalid trial configuration: {0}")]
    InvalidConfig(String),

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;

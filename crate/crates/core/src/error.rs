use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "malformed partition {0:?}: expected comma-separated positive integers in weakly decreasing order, or \"()\""
    )]
    MalformedPartition(String),

    #[error("malformed permutation {0:?}: expected a one-line word using each of 1..n exactly once")]
    MalformedPermutation(String),

    #[error("malformed symmetric function literal {input:?}: {reason}")]
    MalformedElement { input: String, reason: String },

    #[error("size mismatch: |{left}| = {left_size} but |{right}| = {right_size}")]
    SizeMismatch { left: String, left_size: usize, right: String, right_size: usize },

    #[error("degree mismatch: expected S_{expected}, got S_{found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("degree {degree} exceeds the configured cap of {cap} for {what}")]
    CapExceeded { what: &'static str, degree: usize, cap: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("element is not homogeneous of degree {0}")]
    NotHomogeneous(usize),

    #[error("({0}, {1}) is not a supported pair of dual bases; use (s,s), (h,m), (m,h) or (p,p)")]
    NotDualPair(String, String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("invalid transversal: {0}")]
    InvalidTransversal(String),

    #[error("transition cache already initialised with max degree {0}")]
    CacheConfigured(usize),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

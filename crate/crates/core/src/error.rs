use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed permutation `{text}`: {reason}")]
    MalformedPermutation { text: String, reason: String },

    #[error("point {point} repeated in `{text}`")]
    RepeatedPoint { text: String, point: usize },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("degree {0} outside the supported range 1..={max}", max = crate::groupcore::MAX_DEGREE)]
    UnsupportedDegree(usize),

    #[error("generators act on different degrees ({expected} vs {found})")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("empty generator list")]
    NoGenerators,

    #[error("group order exceeds the cap of {cap}")]
    OrderCapExceeded { cap: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("eigenspace splitting failed: {0}")]
    SplittingFailure(String),

    #[error("character value lift out of range: {0}")]
    LiftOutOfRange(String),

    #[error("the given generators do not generate a normal subgroup")]
    NotNormal,

    #[error("permutation {0} is not an element of the group")]
    NotInGroup(String),

    #[error("size mismatch: partition of {partition} against cycle type of {cycle_type}")]
    SizeMismatch { partition: usize, cycle_type: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{what} = {value} outside {lo}..={hi}")]
    OutOfBounds { what: &'static str, value: usize, lo: usize, hi: usize },

    #[error("line {line}: {message}")]
    GroupFile { line: usize, message: String },

    #[error("duplicate group name `{0}`")]
    DuplicateName(String),

    #[error("{0}")]
    Usage(String),

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("index {index} exceeds the degree cap for a coset action")]
    QuotientTooLarge { index: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Error type shared by all modules of the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("profile parse error at position {position}: {message}")]
    ProfileParse { position: usize, message: String },

    #[error("log of zero count at index {0}")]
    LogOfZero(usize),

    #[error("index {0} exceeds series limit {1}")]
    IndexOutOfRange(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("off-support index {n}: stride is {stride}")]
    OffSupport { n: u64, stride: u64 },

    #[error("mismatched growth exponent p: {0} vs {1}")]
    MismatchedP(f64, f64),

    #[error("strides {0} and {1} are not coprime; use combine_multi")]
    NonCoprimeStrides(u64, u64),

    #[error("gcd({x},{y}) = {g} != 1; use progressions_asym for the reducible case")]
    NotCoprime { x: u64, y: u64, g: u64 },

    #[error("empty factor list")]
    EmptyFactorList,

    #[error("empty skew region: series is the constant 1")]
    EmptySkewRegion,

    #[error("uniform profile: count is p(n/h) supported on multiples of h")]
    UniformProfile,

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("non-unique maximum at x = {0}")]
    NonUniqueMaximum(f64),

    #[error("zero coefficient at checkpoint {n}; counts are supported on multiples of {stride}")]
    ZeroAtCheckpoint { n: usize, stride: u64 },
}

use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative radicand: {0}")]
    NegativeRadicand(BigInt),

    #[error("negative edge count: {0}")]
    NegativeEdgeCount(BigInt),

    #[error("vertex count must be at least 1")]
    NoVertices,

    #[error("edge count exceeds binom(n,2): n={n}, m={m}")]
    EdgeCountOutOfRange { n: u64, m: u64 },

    #[error("de Caen bound undefined for n <= 1 (n={0})")]
    DeCaenUndefined(u64),

    #[error("ratio undefined: f(n,m) = 0")]
    RatioUndefined,

    #[error("threshold denominator must be positive")]
    BadThreshold,

    #[error("n < required vertex count: n={n}, required={required}")]
    VertexCountTooSmall { n: u64, required: u64 },

    #[error("oracle cap exceeded: n={n}, cap={cap}")]
    OracleCapExceeded { n: u64, cap: u64 },

    #[error("malformed edge list at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("I/O failure: {0}")]
    Io(String),

    #[error("invalid sweep configuration: {0}")]
    Config(String),
}

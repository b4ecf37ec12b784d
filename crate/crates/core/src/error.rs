use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("{what} {value} out of range {min}..={max}")]
    IndexOutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("permutation {0} fixes n and has no transposed-sector label")]
    FixesN(String),

    #[error("Gram matrix for {alpha} is rank deficient ({rank} < {full}); use the degenerate path")]
    DegenerateGram {
        alpha: String,
        rank: usize,
        full: usize,
    },

    #[error("irrep {0} is absent: it has more rows than the local dimension")]
    AbsentIrrep(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("oracle size guard exceeded: dimension {dim} > {limit}")]
    SizeGuard { dim: usize, limit: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

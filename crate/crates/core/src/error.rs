use thiserror::Error;

/// Errors raised by the hypergraph, coloring and analysis routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("uniformity must be at least 2, got {0}")]
    Uniformity(usize),

    #[error("at most {max} vertices are supported, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("invalid edge {edge:?}: {reason}")]
    InvalidEdge { edge: Vec<usize>, reason: String },

    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid vertex order: {0}")]
    InvalidOrder(String),

    #[error("invalid cube vector `{vector}`: {reason}")]
    CubeVector { vector: String, reason: String },

    #[error("pattern has {pattern} vertices but the host only has {host}")]
    PatternTooLarge { pattern: usize, host: usize },

    #[error("uniformity mismatch: pattern is {pattern}-uniform, family colors {family}-sets")]
    UniformityMismatch { pattern: usize, family: usize },

    #[error("color {color} out of range 1..={k}")]
    ColorOutOfRange { color: u32, k: u32 },

    #[error("color count overflows: {0}")]
    ColorOverflow(String),

    #[error("resample budget of {budget} exhausted after {resamples} resamplings")]
    ResampleBudget { budget: u64, resamples: u64 },

    #[error("vertex set is not monochromatic under the product coloring: {0}")]
    NotMonochromatic(String),

    #[error("(p,q)-coloring mismatch: {0}")]
    PqMismatch(String),

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("malformed family file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

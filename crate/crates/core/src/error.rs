use thiserror::Error;

/// Errors produced by the hypergraph kernel and the tools built on it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("uniformity must be at least 1")]
    InvalidUniformity,

    #[error("at most 64 vertices are supported, got {0}")]
    TooManyVertices(usize),

    #[error("vertex {vertex} out of range for a hypergraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge has {found} distinct vertices, expected {expected}")]
    EdgeSize { expected: usize, found: usize },

    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("weight vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("weight {index} is negative ({value})")]
    NegativeWeight { index: usize, value: f64 },

    #[error("weights sum to {0}, not 1")]
    WeightSum(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("lattice resolution {resolution} too coarse: correction {correction} exceeds lattice maximum {value}")]
    ResolutionTooCoarse {
        resolution: usize,
        correction: f64,
        value: f64,
    },

    #[error("unknown mode {0:?}")]
    InvalidMode(String),
}

pub type Result<T> = std::result::Result<T, Error>;

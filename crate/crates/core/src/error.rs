use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge #{index} ({u}, {v}) is a self-loop")]
    SelfLoop { index: usize, u: usize, v: usize },

    #[error("edge #{index} ({u}, {v}) repeats an earlier pair")]
    DuplicateEdge { index: usize, u: usize, v: usize },

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex sets overlap at vertex {vertex}")]
    OverlappingSets { vertex: usize },

    #[error("clustering does not partition the vertex set: {reason}")]
    PartitionMismatch { reason: String },

    #[error(
        "cycle enumeration bounded at length {max_length} may miss cycles of a graph on {n} vertices"
    )]
    EnumerationTruncated { max_length: usize, n: usize },

    #[error("instance of size {size} exceeds the exhaustive-search limit {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("no acceptable instance after {attempts} attempts")]
    GenerationExhausted { attempts: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

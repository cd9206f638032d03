use thiserror::Error;

/// Errors raised by the library.
///
/// Vertices are always reported by their 1-based labels.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    #[error("ground set must contain at least one vertex")]
    EmptyGroundSet,

    #[error("{m} vertices exceeds the enumeration guard of {limit}")]
    TooManyVertices { m: usize, limit: usize },

    #[error("vertex {vertex} is out of range 1..={m}")]
    VertexOutOfRange { vertex: usize, m: usize },

    #[error("vertex {0} is not in the ground set")]
    UnknownVertex(usize),

    #[error("ground sets differ")]
    GroundSetMismatch,

    #[error("not flag: missing face {witness:?} has more than two vertices")]
    NotFlag { witness: Vec<usize> },

    #[error("1-skeleton is not chordal: chordless cycle {cycle:?}")]
    NotChordal { cycle: Vec<usize> },

    #[error("vertex {0} is a ghost vertex")]
    GhostVertex(usize),

    #[error("ordering is not a permutation of the vertex set")]
    NotAPermutation,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// True for rejections that come from the mathematics (the input is well formed
    /// but outside the domain of the requested construction).
    pub fn is_rejection(&self) -> bool {
        matches!(
            self,
            Error::NotFlag { .. } | Error::NotChordal { .. } | Error::GhostVertex(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

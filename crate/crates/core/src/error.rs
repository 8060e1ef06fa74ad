use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("biclique index {index} out of range for a family of {count} bicliques")]
    BicliqueOutOfRange { index: usize, count: usize },

    #[error("{what} of {requested} exceeds the supported bound {limit}")]
    Capability {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph must have at least {min} vertices, got {order}")]
    TooSmall { order: usize, min: usize },

    #[error("bicliques {i} and {j} intersect; witnesses need a positive distance")]
    IntersectingBicliques { i: usize, j: usize },

    #[error("invalid bounds: {0}")]
    InvalidBounds(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("certificate rejected: {0}")]
    Certificate(String),

    #[error("I/O error: {0}")]
    Io(String),

    #[error("inconsistent results: {0}")]
    Inconsistent(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge endpoint {vertex} out of range for a graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graphs must have between 1 and {max} vertices, got {n}")]
    VertexCount { n: usize, max: usize },
    #[error("invalid family spec: {0}")]
    InvalidFamily(String),
    #[error("graph is disconnected: vertex {to} is unreachable from vertex {from}")]
    Disconnected { from: usize, to: usize },
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("graph is not a block graph")]
    NotBlockGraph,
    #[error("graph is not symmetric even")]
    NotSymmetricEven,
    #[error("eccentric map is not total (some vertex has several eccentric vertices)")]
    EccentricMapNotTotal,
    #[error("{n} vertices exceeds the enumeration ceiling of {ceiling} (use force to override)")]
    CeilingExceeded { n: usize, ceiling: usize },
    #[error("inventory was built for graph {inventory} but audited against {graph}")]
    InventoryMismatch { inventory: String, graph: String },
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

use crate::expr::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("graph of order {order} exceeds the configured limit of {limit} vertices")]
    SizeLimit { order: u128, limit: usize },

    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("edge list, line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("metric dimension needs a graph with at least two vertices, got {0}")]
    TrivialInput(usize),

    #[error("graph is not a tree")]
    NotATree,

    #[error("landmark set contains vertex {0} more than once")]
    RepeatedLandmark(usize),

    #[error("inconsistent bounds: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

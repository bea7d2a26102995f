use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },
    #[error("graph has a bridge (edge {edge})")]
    Bridged { edge: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph6 cannot encode parallel edges (edge {edge})")]
    ParallelEdges { edge: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("size bound exceeded: {what} is {actual}, limit {limit}")]
    BoundExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("valuation is not of Jaeger form at vertex {vertex}")]
    NotJaegerForm { vertex: usize },
    #[error("valuation is not balanced")]
    Unbalanced,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {index} is a loop at vertex {vertex}; loops are not supported")]
    LoopEdge { index: usize, vertex: usize },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("{operation} requires a connected graph (the bounds it relies on assume connectivity)")]
    Disconnected { operation: &'static str },

    #[error("size guard exceeded: {what} = {actual}, limit {limit} (raise the limit in the config to override)")]
    SizeGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("odd vertex count {n}: a 3-regular graph needs an even number of vertices")]
    OddCubicOrder { n: usize },

    #[error("coloring assigns {got} edges but the graph has {expected}")]
    PartialColoring { got: usize, expected: usize },

    #[error("edge {index} has color 0; colors start at 1")]
    ZeroColor { index: usize },

    #[error("coloring is not an interval {t}-coloring: {reason}")]
    NotInterval { t: u32, reason: String },

    #[error("invalid generator parameters for {family}: {reason}")]
    InvalidFamily { family: &'static str, reason: String },

    #[error("node budget of {budget} exhausted during search")]
    NodeBudget { budget: u64 },

    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

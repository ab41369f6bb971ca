use thiserror::Error;

/// Errors raised while building or decoding graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph6 byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{what} requires a parameter of at least {min}, got {got}")]
    ParameterBelowMinimum { what: &'static str, min: usize, got: usize },
    #[error("substitution needs one part per base vertex: {parts} parts for {n} vertices")]
    PartCount { parts: usize, n: usize },
    #[error("vertex order is not a permutation of 0..{0}")]
    NotAPermutation(usize),
}

/// Exhaustive searches either finish, run out of time, or refuse oversized input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("input has {n} vertices, above the configured cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("search exceeded its time budget")]
    Timeout,
    #[error("input is empty")]
    EmptyGraph,
    #[error("precondition failed: {0}")]
    Precondition(String),
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("graph must have at least {min} vertices, found {found}")]
    TooFewVertices { min: usize, found: usize },
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("target vertex {0} belongs to the support set")]
    TargetInSupport(usize),
    #[error("graph has {n} vertices, exceeding the exact limit {limit}; use the sampled lower bound instead")]
    ExactLimitExceeded { n: usize, limit: usize },
    #[error("{what} = {value} out of range {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: &'static str,
    },
    #[error("not a permutation of 1..{n}: {reason}")]
    NotPermutation { n: usize, reason: String },
    #[error("interval endpoint {0} occurs twice")]
    DuplicateEndpoint(String),
    #[error("graph has no edges")]
    NoEdges,
    #[error("hypergraph has no hyperedges")]
    NoHyperedges,
    #[error("invalid hyperedge: {0}")]
    InvalidHyperedge(String),
    #[error("{0} is not an edge of the graph")]
    NotAnEdge(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("internal verification failure: {0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// True for errors caused by malformed textual input.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

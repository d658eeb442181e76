use thiserror::Error;

/// Errors raised while building or validating a [`Graph`](crate::Graph).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,

    #[error("edge {u}-{v} references a vertex outside 0..{vertex_count}")]
    VertexOutOfRange { u: usize, v: usize, vertex_count: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("graph is disconnected: vertex {0} is unreachable from vertex 0")]
    Disconnected(usize),

    #[error("base node {index} is outside 0..{vertex_count}")]
    BadBaseNode { index: usize, vertex_count: usize },

    #[error("{0} vertex labels supplied for {1} vertices")]
    LabelCount(usize, usize),
}

/// Input-format errors. `line` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("base-node reference requested but the graph has no base node")]
    NoBaseNode,

    #[error("contour system has no rows")]
    EmptySystem,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("entropy of an all-zero or empty weight vector is undefined")]
    AllZero,

    #[error("parameter `{name}` must be positive, got {value}")]
    NonPositiveParameter { name: &'static str, value: f64 },

    #[error("{what} supports at most {limit} vertices, got {got}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        got: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

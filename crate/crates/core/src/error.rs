use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("orientation has {got} bits but the graph has {expected} edges")]
    BitLength { expected: usize, got: usize },
    #[error("invalid orientation encoding: {0}")]
    Encoding(String),
    #[error("pair endpoints must differ (got {0} twice)")]
    EqualVertices(usize),
    #[error("operation needs at least {needed} vertices, got {n}")]
    TooFewVertices { n: usize, needed: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("{method} search is capped at {cap} edges but the graph has {m}; use {suggestion}")]
    EdgeCapExceeded {
        method: &'static str,
        m: usize,
        cap: usize,
        suggestion: &'static str,
    },
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Graph6 { .. }
            | Error::Parse { .. }
            | Error::Encoding(_)
            | Error::SelfLoop(_)
            | Error::VertexOutOfRange { .. }
            | Error::DuplicateEdge(..)
            | Error::DuplicateArc(..)
            | Error::BitLength { .. }
            | Error::Io { .. } => 2,
            Error::EdgeCapExceeded { .. } => 4,
            _ => 3,
        }
    }
}

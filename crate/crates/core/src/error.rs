use thiserror::Error;

/// Errors raised by graph construction, parsing and the parameter guards of
/// the generators and deciders.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} is not in the given vertex set")]
    NotInSet(usize),
    #[error("{u} and {v} are not adjacent")]
    NotAnEdge { u: usize, v: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("instance exceeds the exhaustive cap: {0}")]
    CapExceeded(String),
    #[error("picker contract violated: {0}")]
    PickerContract(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("too many undecided trials: {0}")]
    Undecided(String),
    #[error("estimates are not monotone in p: {0}")]
    NonMonotone(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("ring context mismatch: {0}")]
    ContextMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("empty ideal: {0}")]
    EmptyIdeal(String),
    #[error("monomial ideal is not squarefree: {0}")]
    NotSquarefree(String),
    #[error("parts share variables: {0}")]
    VariableOverlap(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by caller input rather than by limits or bugs.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::ResourceLimit(_) | Error::Invariant(_))
    }
}

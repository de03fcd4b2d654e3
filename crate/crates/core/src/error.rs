use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the formula.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("projection undefined: {0}")]
    UndefinedProjection(String),

    #[error("degenerate pair: end invariants coincide")]
    DegeneratePair,

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("unsupported surface: {0}")]
    UnsupportedSurface(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("element is not in the image of W: {0}")]
    NotInImage(String),
    #[error("not a group element: {0}")]
    NotInGroup(String),
    #[error("no coefficient for form class {0}")]
    MissingCoefficient(String),
    #[error("degenerate point: {0}")]
    DegeneratePoint(String),
    #[error("pole near evaluation point: {0}")]
    Pole(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

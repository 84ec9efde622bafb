use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Unsupported root system, bad subset indices, out-of-range parameters.
    #[error("configuration error: {0}")]
    Config(String),

    /// An argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration would exceed its size bound.
    #[error("capacity exceeded: {what} needs more than {cap} entries")]
    Capacity { what: String, cap: usize },

    /// A Bruhat-order precondition `lower <= upper` failed.
    #[error("{lower} is not below {upper} in Bruhat order")]
    NotComparable { lower: String, upper: String },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

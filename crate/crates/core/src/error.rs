use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual input; `offset` is a byte offset into the input.
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Well-formed input outside an operation's domain.
    #[error("invalid input: {0}")]
    Domain(String),

    /// A parameter combination with no supported theory behind it.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A size guard tripped.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// An exactness check failed. This always indicates a bug upstream.
    #[error("internal exactness check failed: {0}")]
    Inexact(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}

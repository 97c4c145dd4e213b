use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A search or enumeration was asked to run past its size limit.
    #[error("{what}: {got} exceeds the limit of {limit}")]
    Guard {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    /// An internal consistency check that a proven statement guarantees has failed.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}

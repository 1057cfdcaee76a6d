use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed data: unknown generators, dangling ids, disconnected graphs.
    #[error("structural error: {0}")]
    Structural(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    /// Marking words are inconsistent with the abstract groups inside some
    /// finite quotient.
    #[error("invalid marking: {0}")]
    InvalidMarking(String),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("configuration error: {0}")]
    Configuration(String),
    /// A check whose hypotheses do not hold for the given input. Distinct
    /// from a failed check.
    #[error("check not applicable: {0}")]
    Inapplicable(String),
    #[error("resource cap `{cap}` = {value} exceeded")]
    Resource { cap: &'static str, value: u64 },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

use thiserror::Error;

/// Errors produced by the fitting, codec and I/O layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid-argument: {0}")]
    InvalidArgument(String),
    #[error("corrupt-input: {0}")]
    CorruptInput(String),
    #[error("wrong-format: {0}")]
    WrongFormat(String),
    #[error("unsupported-format: {0}")]
    UnsupportedFormat(String),
    #[error("unsupported-version: {0}")]
    UnsupportedVersion(u8),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn corrupt(msg: impl Into<String>) -> Self {
        Error::CorruptInput(msg.into())
    }

    /// Short machine-friendly name of the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidArgument(_) => "invalid-argument",
            Error::CorruptInput(_) => "corrupt-input",
            Error::WrongFormat(_) => "wrong-format",
            Error::UnsupportedFormat(_) => "unsupported-format",
            Error::UnsupportedVersion(_) => "unsupported-version",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

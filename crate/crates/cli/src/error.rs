use thiserror::Error;

/// Errors that stop a command before it can report.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] walls::Error),

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("malformed b-file: {0}")]
    BFile(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Core(walls::Error::Domain(_)) => 2,
            CliError::Core(walls::Error::Capacity { .. }) => 3,
            _ => 1,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

pub fn usage<T>(message: impl Into<String>) -> Result<T> {
    Err(CliError::Usage(message.into()))
}

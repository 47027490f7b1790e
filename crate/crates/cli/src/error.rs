use thiserror::Error;

/// Failures surfaced by the command line tool, split by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// The input could not be read or does not describe a structure. Exit code 2.
    #[error("{0}")]
    Malformed(String),

    /// The input is well formed but a checked property fails. Exit code 1.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Malformed(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl From<ybe_core::Error> for CliError {
    fn from(e: ybe_core::Error) -> Self {
        match e {
            ybe_core::Error::MalformedTable(_) => CliError::Malformed(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Malformed(e.to_string())
    }
}

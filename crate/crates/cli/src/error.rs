use std::path::PathBuf;

use thiserror::Error;

/// Failures of one command, mapped to the process exit status.
#[derive(Error, Debug)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },

    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },

    #[error(transparent)]
    Engine(#[from] syzlab::Error),

    #[error("{0}")]
    Violation(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Read { .. } => 2,
            CliError::Engine(
                syzlab::Error::Parse { .. } | syzlab::Error::InvalidPrime(_) | syzlab::Error::InvalidArgument(_),
            ) => 2,
            CliError::Write { .. } | CliError::Engine(_) => 3,
            CliError::Violation(_) => 4,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

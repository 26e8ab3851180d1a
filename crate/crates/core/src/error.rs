use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the framework.
#[derive(Debug, Error)]
pub enum BrkgaError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("decoder failure: {0}")]
    Decode(String),

    #[error("generation {generation}: {source}")]
    Generation {
        generation: u64,
        #[source]
        source: Box<BrkgaError>,
    },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl BrkgaError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        BrkgaError::InvalidArgument(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        BrkgaError::InvalidConfig(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        BrkgaError::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn at_generation(self, generation: u64) -> Self {
        match self {
            e @ BrkgaError::Generation { .. } => e,
            e => BrkgaError::Generation {
                generation,
                source: Box::new(e),
            },
        }
    }

    /// True for failures caused by reading or writing files.
    pub fn is_io(&self) -> bool {
        match self {
            BrkgaError::Io { .. } => true,
            BrkgaError::Generation { source, .. } => source.is_io(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, BrkgaError>;

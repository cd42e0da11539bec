use std::path::PathBuf;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ingestion produced no documents{}", .reason.as_deref().map(|r| format!(" ({r})")).unwrap_or_default())]
    EmptyIngest { reason: Option<String> },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("parse error at {path}:{line}: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("unknown word: {0}")]
    UnknownWord(String),

    #[error("topic id {topic} out of range (K = {k})")]
    TopicOutOfRange { topic: usize, k: usize },

    #[error("vocabulary mismatch: {0}")]
    VocabMismatch(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("missing artifact: {0}")]
    MissingArtifact(PathBuf),

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Process exit status for the CLI: 1 for validation problems,
    /// 2 when an upstream artifact is missing.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::MissingArtifact(_) => 2,
            _ => 1,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

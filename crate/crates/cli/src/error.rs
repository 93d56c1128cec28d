use std::path::{Path, PathBuf};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("config {path}, line {line}: {reason}")]
    Config { path: PathBuf, line: usize, reason: String },
    #[error("{key}: {path} does not exist")]
    MissingPath { key: &'static str, path: PathBuf },
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: defminer_core::Error,
    },
    #[error("{stage}: {reason}")]
    Data { stage: &'static str, reason: String },
    #[error("writing {path}: {source}")]
    Output {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 1 for usage and configuration problems, 2 for bad input data, 3 for
    /// failures while writing results.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Config { .. } => 1,
            CliError::MissingPath { .. } | CliError::Stage { .. } | CliError::Data { .. } => 2,
            CliError::Output { .. } => 3,
        }
    }

    pub(crate) fn output(path: &Path, source: std::io::Error) -> Self {
        CliError::Output {
            path: path.to_path_buf(),
            source,
        }
    }
}

/// Tags a core error with the pipeline stage that produced it.
pub(crate) trait StageExt<T> {
    fn stage(self, stage: &'static str) -> Result<T, CliError>;
}

impl<T, E: Into<defminer_core::Error>> StageExt<T> for Result<T, E> {
    fn stage(self, stage: &'static str) -> Result<T, CliError> {
        self.map_err(|e| CliError::Stage {
            stage,
            source: e.into(),
        })
    }
}

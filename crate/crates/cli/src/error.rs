use std::path::PathBuf;

use circ_iso_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("golden file {0} does not exist")]
    MissingGolden(PathBuf),

    #[error("golden mismatch:\n{0}")]
    GoldenMismatch(String),

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 1 for verdict-level failures, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(
                CoreError::TheoremViolation { .. }
                | CoreError::ClosureViolation { .. }
                | CoreError::BudgetExceeded { .. },
            )
            | CliError::GoldenMismatch(_) => 1,
            CliError::Io { .. } | CliError::Json(_) => 1,
            _ => 2,
        }
    }
}

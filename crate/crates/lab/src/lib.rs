//! File formats, reports, the verification grid and the command implementations
//! behind the `lklab` binary.

pub mod commands;
pub mod config;
pub mod dimacs;
pub mod export;
pub mod grid;
pub mod report;

use std::io;

pub use report::{ExperimentRecord, Status};

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error(transparent)]
    Core(#[from] lklab_core::Error),

    #[error("{source_name}:{line}: {message}")]
    Schema {
        source_name: String,
        line: usize,
        message: String,
    },

    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl LabError {
    pub fn schema(source_name: &str, line: usize, message: impl Into<String>) -> Self {
        LabError::Schema {
            source_name: source_name.to_string(),
            line,
            message: message.into(),
        }
    }

    pub fn io(path: impl std::fmt::Display, source: io::Error) -> Self {
        LabError::Io {
            path: path.to_string(),
            source,
        }
    }

    /// 1 for a failed theorem check, 3 for an exhausted budget, 2 otherwise.
    pub fn exit_code(&self) -> u8 {
        use lklab_core::Error as E;
        match self {
            LabError::Core(e) if e.is_budget() => 3,
            LabError::Core(E::CharacterizationViolation(_) | E::InternalInconsistency(_)) => 1,
            _ => 2,
        }
    }
}

pub type Result<T, E = LabError> = std::result::Result<T, E>;

use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AppError {
    #[error(transparent)]
    Core(#[from] weilauth_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Buffer(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl AppError {
    /// 1 for usage and parse errors, 2 for exceeded caps and size limits.
    pub fn exit_code(&self) -> i32 {
        use weilauth_core::Error as E;
        match self {
            AppError::Core(E::CapExceeded { .. } | E::DegreeTooLarge { .. } | E::FieldTooLarge) => 2,
            _ => 1,
        }
    }
}

pub type Result<T, E = AppError> = std::result::Result<T, E>;

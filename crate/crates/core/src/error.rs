use std::path::PathBuf;

use crate::centrality::Measure;

/// Errors surfaced by the library. Malformed input *lines* are never errors;
/// they are counted in the owning [`crate::Dataset`] instead.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("partitions cover different node sets ({left} vs {right} nodes, first difference: {first_diff})")]
    PartitionMismatch {
        left: usize,
        right: usize,
        first_diff: String,
    },

    #[error("retweet networks are limited to degree centrality by default; {measure} requires the override flag")]
    RetweetMeasureNotPermitted { measure: Measure },

    #[error("graph import: {0}")]
    GraphImport(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

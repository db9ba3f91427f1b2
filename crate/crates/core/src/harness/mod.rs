//! Exhaustive search, table verification and the corrections audit.

mod audit;
mod checkpoint;
mod kernel;
mod search;
mod verify;

use std::path::PathBuf;

use thiserror::Error;

pub use audit::{audit_changes, ChangeCheck};
pub use search::{
    run_search, search_defective, search_with_jobs, SearchConfig, SearchOutcome, SearchResult, DEFAULT_CHUNK_SIZE,
    MAX_BOUND,
};
pub use verify::{
    verify_table, verify_table_with_jobs, DiscrepancyReport, FailureReason, TableFailure, TableRef,
};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("n = {0} is not in the classification table")]
    UnsupportedN(u32),
    #[error("bound {0} exceeds the supported maximum {MAX_BOUND}")]
    BoundTooLarge(u64),
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("checkpoint does not belong to this run: {0}")]
    CheckpointMismatch(String),
    #[error("checkpoint is damaged: {0}")]
    CheckpointCorrupt(String),
}

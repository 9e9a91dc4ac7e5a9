//! Batch front end for `seshadri-core`: instance files, command dispatch and reports.

pub mod instance;
pub mod report;
pub mod run;

pub use instance::{load, parse_instance, Instance, InstanceFile, BUILTINS};
pub use report::Report;
pub use run::{run, Command, Flags};

use seshadri_core::oracle::OracleError;
use seshadri_core::seshadri::SeshadriError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error(transparent)]
    Seshadri(#[from] SeshadriError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

//! Command-line front end: structure files and catalog entries in,
//! text or JSON reports out.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 when a
//! check (or the pipeline) hits an undecidable zero test, 3 for input
//! errors.

pub mod commands;
mod error;
pub mod report;

pub use error::CliError;
pub use report::{Check, Report, Status, REPORT_VERSION};

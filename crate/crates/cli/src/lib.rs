//! Command implementations and check suites behind the `scramble-lab`
//! binary.

pub mod commands;
pub mod error;
pub mod report;
pub mod suites;

pub use error::CliError;
pub use report::{CheckRecord, SuiteReport, SCHEMA};

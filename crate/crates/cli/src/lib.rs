//! Library half of the `lexnet` experiment runner: configuration parsing,
//! artifact builders, orchestration, and the run manifest. The binary in
//! `main.rs` is a thin dispatcher over [`runner`].

#![forbid(unsafe_code)]

pub mod config;
pub mod error;
pub mod manifest;
pub mod report;
pub mod runner;

pub use config::{Analysis, ExperimentConfig};
pub use error::CliError;
pub use runner::{OutputFormat, RunOptions, RunOutcome};

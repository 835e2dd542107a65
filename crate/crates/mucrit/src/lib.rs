//! Verification suites, a thread-pool runner for the searches in
//! `mucrit-core`, report serialization and the `mucrit` command line.

pub mod cli;
pub mod dto;
pub mod error;
pub mod render;
pub mod runner;
pub mod suites;

pub use dto::{CheckDto, Report, SearchDto, SuiteDto, WitnessDto, SCHEMA};
pub use error::{CliError, Result};
pub use runner::Runner;

//! Commands behind the `hosvd3` binary. Each returns its output as a string
//! so it can be tested without touching the file system.

pub mod commands;
pub mod error;
pub mod report;
pub mod state_file;

pub use error::{CliError, CliResult};
pub use state_file::StateFile;

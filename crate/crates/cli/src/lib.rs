//! File formats and subcommands behind the `graphmml` binary.

pub mod commands;
pub mod error;
pub mod files;

pub use commands::{Format, Options, TreeAction, TreeKind};
pub use error::CliError;

//! Command-line front end: file formats, subcommands and report output.

pub mod commands;
pub mod error;
pub mod files;

pub use commands::{run, run_args, Cli, Command};
pub use error::CliError;
pub use files::{load_roots, load_system, parse_roots, parse_system};

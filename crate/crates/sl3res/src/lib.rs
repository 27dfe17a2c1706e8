//! Command-line front end for `sl3res-core`: argument parsing, the five
//! subcommands and their JSON reports.

pub mod args;
pub mod commands;
pub mod json;

pub use args::{Cli, Command, Common};
pub use commands::{exit_code, reingest, run, Outcome};

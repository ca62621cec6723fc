//! Command-line front end: the descriptor grammar and the subcommands of
//! the `rankin` binary.

pub mod commands;
pub mod parse;

pub use commands::{run, Cli, Outcome, UsageError, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
pub use parse::{parse_descriptor, DescriptorError, ParseError, Parsed};

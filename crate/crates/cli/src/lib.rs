//! File formats and command-line front end for `recolor-core`.

pub mod cli;
pub mod dimacs;
pub mod dot;
pub mod error;
pub mod files;

pub use cli::run;
pub use error::CliError;

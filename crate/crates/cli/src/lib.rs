//! Command-line front end for `qhankel-core`: sequence and triangle tables,
//! Hankel determinants, J-fractions, orthogonal polynomials and the identity
//! checks, with plain, JSON and CSV output.

pub mod args;
pub mod commands;
pub mod expr;
pub mod render;

pub use args::Cli;
pub use commands::{run, CliError};
pub use expr::parse_poly;

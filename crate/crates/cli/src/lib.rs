//! Command-line front end: expression parser, canonical printer, JSON file
//! formats, property-check suites, and the subcommand dispatcher.

pub mod check;
pub mod formats;
pub mod parser;
pub mod printer;

mod cli;

pub use cli::run;

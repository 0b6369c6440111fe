//! File formats, reports and the command-line front end for
//! [`hyperfuzz_core`].

pub mod cli;
pub mod format;
pub mod report;

pub use cli::run;
pub use format::{parse_fuzzy, parse_hypergroupoid, render_fuzzy, render_hypergroupoid, ParseError, ParseErrorKind, Position};

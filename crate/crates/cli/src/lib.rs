//! Text formats and subcommands behind the `schreier` binary.

pub mod action;
pub mod cert;
pub mod commands;
pub mod dot;
pub mod error;
pub mod heg;

pub use cert::{Certificate, CoveringDoc, Verdict};
pub use error::{exit, CliError, ParseError};
pub use heg::{canonicalize, parse_graph, serialize_graph};

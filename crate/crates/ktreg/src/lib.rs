//! File formats, reports and the command-line front end for `ktreg-core`.

pub mod cli;
pub mod graphfile;
pub mod parallel;
pub mod report;

pub use graphfile::{GraphFile, ParseError};
pub use report::{Report, Status};

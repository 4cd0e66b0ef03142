//! Command-line front end for `circ-iso-core`: request execution, JSON
//! reports, golden-file comparison and the parallel grid driver.

pub mod error;
pub mod golden;
pub mod grid;
pub mod report;
pub mod request;

pub use error::CliError;
pub use golden::{diff_text, golden_compare, golden_compare_json, json_diff, normalise, LineDiff};
pub use grid::{preset, run_grid, THREADS_ENV};
pub use report::{Provenance, Report};
pub use request::{FamilyArgs, Options, Outcome, Request};

//! Command-line front end: argument parsing, rendering and run records.

pub mod args;
pub mod record;
pub mod render;
pub mod run;

pub use args::Cli;
pub use record::{Report, RunRecord};
pub use run::{main_with, run, Exit, Outcome};

//! Std companion to `qcert-core`: timed and parallel check execution, report
//! rendering (text, JSON, CSV), and the `qcert` command line.

pub mod cli;
pub mod report;
pub mod runner;

/// Environment variable overriding every default precision.
pub const PREC_ENV: &str = "QCERT_PREC";

//! Command-line front end for the correlation-immunity toolkit: function
//! ingestion, analysis commands, exhaustive sweeps, benchmark mode, and JSON
//! reporting.

pub mod commands;
pub mod engine;
pub mod format;
pub mod report;

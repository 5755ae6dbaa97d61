//! Library surface of the command-line tool: matrix ingestion, report
//! construction, and the subcommand implementations. The binary in
//! `main.rs` is a thin clap wrapper over this.

pub mod commands;
pub mod error;
pub mod ingest;
pub mod report;

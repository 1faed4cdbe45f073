//! Fixture ingestion, the shipped catalog and the command drivers behind the
//! `coring-lab` binary.

pub mod catalog;
pub mod commands;
pub mod fixture;

pub use commands::ReportDocument;
pub use fixture::{load_fixture, load_str, Fixture, FixtureFile, LoadError, Mode, ReportConfig};

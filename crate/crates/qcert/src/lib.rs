//! Command-line verifier and file formats on top of `qcert-core`.

pub mod cli;
pub mod format;
pub mod report;
pub mod runner;

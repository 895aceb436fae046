//! File formats, reports and the command-line front end for `homex-core`.

pub mod dsl;
pub mod certificate;
pub mod cli;
pub mod report;
pub mod workspace;

pub use homex_core as core;

//! File formats, instance generators and the command-line front end for
//! `stablecount-core`.

pub mod cli;
pub mod format;
pub mod generate;
pub mod report;

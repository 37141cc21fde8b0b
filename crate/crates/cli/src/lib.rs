//! Command-line layer over `domdim-core`: the algebra file format, built-in
//! fixtures, verification suites and their reports.

pub mod format;
pub mod report;
pub mod summary;
pub mod verify;

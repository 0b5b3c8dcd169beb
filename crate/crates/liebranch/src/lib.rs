//! Command-line front-end for `liebranch-core`: fixture files, the sparse
//! matrix dump format and JSON reports.

pub mod app;
pub mod dump;
pub mod fixtures;
pub mod report;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const MISMATCH: i32 = 2;
    pub const INTERNAL: i32 = 3;
}

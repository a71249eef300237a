//! Command line and file formats for `schurid-core`.

pub mod cli;
pub mod format;

pub use cli::run;

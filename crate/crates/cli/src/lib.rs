//! File formats, the standard catalog, reports and the sweep driver behind
//! the `ccix` command.

pub mod catalog;
pub mod error;
pub mod format;
pub mod inspect;
pub mod report;
pub mod run;

pub use error::CliError;
pub use format::{parse_matroid, parse_matroid_str, write_matroid, MatroidFile};
pub use report::Report;
pub use run::{verify_paths, VerifyOptions};

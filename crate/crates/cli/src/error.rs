use std::io;

use ccix_core::Error as CoreError;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },

    #[error("{origin}: parse error: {message}")]
    Parse { origin: String, message: String },

    #[error("{origin}: axiom {axiom} violated: {detail}")]
    Axiom {
        origin: String,
        axiom: &'static str,
        detail: String,
    },

    #[error("{origin}: {size} elements, more than 64")]
    TooLarge { origin: String, size: usize },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Io { .. } | Self::Parse { .. } | Self::Axiom { .. } | Self::TooLarge { .. } | Self::Usage(_) => {
                EXIT_INPUT
            }
            Self::Core(e) => core_exit_code(e),
        }
    }

    /// Short machine-readable kind for reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Io { .. } => "io",
            Self::Parse { .. } => "parse",
            Self::Axiom { .. } => "axiom",
            Self::TooLarge { .. } => "too-large",
            Self::Usage(_) => "usage",
            Self::Core(e) => match e {
                CoreError::CapExceeded { .. } | CoreError::ScanLimit { .. } => "cap-exceeded",
                CoreError::TheoremViolation(_) => "theorem-violation",
                CoreError::ExtractionFailed { .. } => "extraction-failed",
                CoreError::LiftFailed => "lift-failed",
                _ => "input",
            },
        }
    }
}

pub fn core_exit_code(e: &CoreError) -> i32 {
    match e {
        CoreError::CapExceeded { .. } | CoreError::ScanLimit { .. } => EXIT_CAP,
        CoreError::TheoremViolation(_)
        | CoreError::ExtractionFailed { .. }
        | CoreError::LiftFailed
        | CoreError::PreconditionViolated(_) => EXIT_ASSERTION,
        _ => EXIT_INPUT,
    }
}

use std::fmt;

/// Stable process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VIOLATIONS: i32 = 1;
    pub const MALFORMED: i32 = 2;
    pub const PRECONDITION: i32 = 3;
    /// A certificate failed its own re-verification. Always a bug.
    pub const INTERNAL: i32 = 4;
    pub const NOT_SCHREIER_WITH_COVER: i32 = 10;
    pub const COVER_ONLY: i32 = 11;
}

/// A syntax or range error in a text document, with its 1-based line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Precondition(#[from] schreier_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("emitted certificate failed re-verification: {0}")]
    SelfCheck(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Io { .. } => exit::MALFORMED,
            CliError::Precondition(schreier_core::Error::Internal(_)) | CliError::SelfCheck(_) => {
                exit::INTERNAL
            }
            CliError::Precondition(_) | CliError::Usage(_) => exit::PRECONDITION,
        }
    }
}

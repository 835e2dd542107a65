use std::fmt;

/// Errors surfaced by the command-line layer.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or parameters; maps to exit code 2.
    Usage(String),
    Core(mucrit_core::Error),
    Io(std::io::Error),
    Json(serde_json::Error),
    Csv(csv::Error),
    ThreadPool(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Json(e) => write!(f, "json error: {e}"),
            CliError::Csv(e) => write!(f, "csv error: {e}"),
            CliError::ThreadPool(m) => write!(f, "thread pool: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<mucrit_core::Error> for CliError {
    fn from(e: mucrit_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Csv(e)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

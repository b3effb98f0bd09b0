use std::path::Path;

use olctkit::{ErrorClass, OlctError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("ParseError at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{code}: {message}")]
    Validation { code: &'static str, message: String },
    #[error("{code}: {message}")]
    Numerical { code: &'static str, message: String },
    #[error("IoError: {0}")]
    Io(String),
}

impl CliError {
    pub fn validation(code: &'static str, message: String) -> Self {
        CliError::Validation { code, message }
    }

    pub fn numerical(code: &'static str, message: String) -> Self {
        CliError::Numerical { code, message }
    }

    pub fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Io(format!("{}: {e}", path.display()))
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "ParseError",
            CliError::Validation { code, .. } | CliError::Numerical { code, .. } => code,
            CliError::Io(_) => "IoError",
        }
    }

    pub fn class(&self) -> &'static str {
        match self {
            CliError::Parse { .. } | CliError::Validation { .. } => "validation",
            CliError::Numerical { .. } => "numerical",
            CliError::Io(_) => "io",
        }
    }

    /// 1 validation, 2 numerical, 3 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Validation { .. } => 1,
            CliError::Numerical { .. } => 2,
            CliError::Io(_) => 3,
        }
    }

    /// Single `key=value` line for scripts.
    pub fn machine_line(&self) -> String {
        format!("error code={} class={} exit={} message={:?}", self.code(), self.class(), self.exit_code(), self.to_string())
    }
}

impl From<OlctError> for CliError {
    fn from(e: OlctError) -> Self {
        let full = e.to_string();
        let message = full.strip_prefix(&format!("{}: ", e.code())).unwrap_or(&full).to_string();
        match e.class() {
            ErrorClass::Validation => CliError::Validation { code: e.code(), message },
            ErrorClass::Numerical => CliError::Numerical { code: e.code(), message },
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        if e.is_io_error() {
            CliError::Io(e.to_string())
        } else {
            CliError::validation("CsvFormat", e.to_string())
        }
    }
}

use serde::Serialize;
use thiserror::Error;

use extact::{ComplexError, MatroidError, OrderError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot parse {what}: {message}")]
    Parse { what: String, message: String },
    #[error("{0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

impl CliError {
    pub fn parse(what: impl Into<String>, message: impl ToString) -> Self {
        CliError::Parse {
            what: what.into(),
            message: message.to_string(),
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io-error",
            CliError::Parse { .. } => "parse-error",
            CliError::InvalidArgument(_) => "invalid-argument",
            CliError::Matroid(e) => e.code(),
            CliError::Order(e) => e.code(),
            CliError::Complex(e) => e.code(),
        }
    }

    /// 3 for unreadable or unparsable input, 2 for everything that parsed but
    /// failed validation.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } => 3,
            _ => 2,
        }
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    code: &'a str,
    message: String,
}

#[derive(Serialize)]
pub struct ErrorObject<'a> {
    error: ErrorBody<'a>,
}

impl<'a> From<&'a CliError> for ErrorObject<'a> {
    fn from(e: &'a CliError) -> Self {
        ErrorObject {
            error: ErrorBody {
                code: e.code(),
                message: e.to_string(),
            },
        }
    }
}

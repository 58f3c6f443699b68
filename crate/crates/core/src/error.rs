use thiserror::Error;

/// Errors raised by group construction, enumeration and the dimension routes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters for {family}: {constraint}")]
    InvalidParameters { family: String, constraint: String },

    #[error("resource budget exceeded: {what} ({value} > {limit})")]
    Resource {
        what: String,
        value: u64,
        limit: u64,
    },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid presentation: {0}")]
    Presentation(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("routes disagree: {0}")]
    Mismatch(String),

    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn params(family: impl Into<String>, constraint: impl Into<String>) -> Self {
        Error::InvalidParameters {
            family: family.into(),
            constraint: constraint.into(),
        }
    }

    pub(crate) fn resource(what: impl Into<String>, value: u64, limit: u64) -> Self {
        Error::Resource {
            what: what.into(),
            value,
            limit,
        }
    }

    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

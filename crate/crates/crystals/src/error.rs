//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised while parsing, validating or transforming crystal elements.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CrystalError {
    /// Malformed textual input (Cartan type, weight, letter, JSON).
    #[error("parse error: {0}")]
    Parse(String),
    /// Well-formed input that does not describe a valid object.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// The operation is not available for this Cartan family.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl CrystalError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        CrystalError::Invalid(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        CrystalError::Parse(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        CrystalError::Unsupported(msg.into())
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, CrystalError>;

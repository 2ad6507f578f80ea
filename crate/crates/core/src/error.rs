//! Error types for loading and running queries.

use thiserror::Error;

/// Error raised while parsing or validating a query file.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    /// 1-based line of the offending token.
    pub line: usize,
    /// 1-based column of the offending token.
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

/// Error raised by the query engine after a file has loaded cleanly.
#[derive(Debug, Clone, Error)]
pub enum EngineError {
    #[error("negative question values must be ground, got {0}")]
    NonGroundValue(String),
    #[error("similarity arity mismatch: {0}/{1} vs {2}/{3}")]
    SimilarityArity(String, usize, String, usize),
    #[error("internal error: {0}")]
    Internal(String),
}

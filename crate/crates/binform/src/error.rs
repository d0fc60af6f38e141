//! Error taxonomy shared by every module.
//!
//! The variants mirror the failure classes of the public operations:
//! [`Error::Range`] for violated order/index preconditions, [`Error::Validation`]
//! for malformed user input (sign sequences, vectors, parameters),
//! [`Error::Triad`] for half-integer triples that are not triads,
//! [`Error::Degenerate`] for forms outside an operation's domain (for example a
//! vanishing j-invariant denominator), [`Error::Parse`] for unreadable payloads,
//! and [`Error::Internal`] for broken invariants that indicate a bug rather
//! than bad input. The command-line front end maps `Internal` to exit code 2
//! and everything else to exit code 1.

use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An order, index, or parameter precondition was violated.
    #[error("range error: {0}")]
    Range(String),
    /// Structurally invalid input (bad sign sequence, wrong vector length, ...).
    #[error("validation error: {0}")]
    Validation(String),
    /// A half-integer triple failed the triad conditions.
    #[error("triad error: {0}")]
    Triad(String),
    /// The input form lies outside the operation's domain.
    #[error("degenerate-form error: {0}")]
    Degenerate(String),
    /// A payload could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// An internal consistency assertion failed; this is a bug, not bad input.
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

/// Convenient result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

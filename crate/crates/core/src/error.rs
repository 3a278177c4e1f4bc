use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The argument hits a pole of a rational expression.
    #[error("pole: {0}")]
    Pole(String),

    /// A root bracket could not be established.
    #[error("no root: {0}")]
    NoRoot(String),

    /// The requested degree exceeds what double precision can represent.
    #[error("degree {n} exceeds the supported maximum {max}")]
    DegreeTooLarge { n: u32, max: u32 },

    /// A numerical self-check failed.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

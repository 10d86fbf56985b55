use thiserror::Error;

/// Errors raised by the semigroup, closed-form and ideal routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation (negative
    /// integer, element not in the semigroup, decreasing ladder, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// 64-bit arithmetic would overflow for the given input.
    #[error("range error: {0}")]
    Range(String),

    /// Family parameters violate their hypotheses.
    #[error("invalid parameters: {0}")]
    Parameter(String),

    /// An input does not have the shape an operation relies on.
    #[error("structure error: {0}")]
    Structure(String),

    /// An instantiated formula produced an impossible value, such as a
    /// negative exponent.
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

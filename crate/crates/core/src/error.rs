use thiserror::Error;

/// Errors raised by constructors, parsers and constructions in this crate.
///
/// Validators never return these for a merely invalid object; violations of
/// the combinatorial axioms are reported as data in a
/// [`ValidationReport`](crate::ValidationReport).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not an odd integer >= 3")]
    Modulus(i64),
    #[error("mixed moduli: {0} and {1}")]
    MixedModulus(i64, i64),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("malformed weak cell {row_value}:{col_value}")]
    MalformedCell { row_value: i64, col_value: i64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error("axiom violated: {0}")]
    Axiom(String),
    #[error("inconsistent embedding: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

use std::fmt;

use qheis::algebra::NonBasisWord;
use qheis::coeff::CoeffError;
use qheis::lie::LieError;
use qheis::spectral::SpectralError;

/// Lexical and grammatical errors. Columns are 1-based character positions.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SyntaxError {
    #[error("column {column}: unexpected character {ch:?}")]
    BadCharacter { column: usize, ch: char },
    #[error("column {column}: unknown name {name:?} (products need an explicit '*')")]
    UnknownName { column: usize, name: String },
    #[error("column {column}: found {found}, expected {}", ExpectedList(.expected))]
    Unexpected {
        column: usize,
        found: String,
        expected: Vec<&'static str>,
    },
    #[error("column {column}: exponent {value} is too large")]
    ExponentTooLarge { column: usize, value: String },
    #[error("invalid {what} {text:?}: {reason}")]
    BadArgument {
        what: &'static str,
        text: String,
        reason: &'static str,
    },
}

impl SyntaxError {
    pub fn column(&self) -> Option<usize> {
        match self {
            SyntaxError::BadCharacter { column, .. }
            | SyntaxError::UnknownName { column, .. }
            | SyntaxError::Unexpected { column, .. }
            | SyntaxError::ExponentTooLarge { column, .. } => Some(*column),
            SyntaxError::BadArgument { .. } => None,
        }
    }
}

struct ExpectedList<'a>(&'a [&'static str]);

impl fmt::Display for ExpectedList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            [] => f.write_str("nothing"),
            [one] => f.write_str(one),
            many => write!(f, "one of {}", many.join(", ")),
        }
    }
}

/// Errors that come from the mathematics rather than the input text.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DomainError {
    #[error("division by a non-scalar expression")]
    NonScalarDivisor,
    #[error("expected a scalar expression in q")]
    NotScalar,
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    NonBasis(#[from] NonBasisWord),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("{0}")]
    Spectral(String),
    #[error("result is not a finite number")]
    NonFinite,
    #[error("{0}")]
    Invalid(String),
}

impl From<SpectralError> for DomainError {
    fn from(e: SpectralError) -> Self {
        DomainError::Spectral(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("syntax error: {0}")]
    Syntax(#[from] SyntaxError),
    #[error("error: {0}")]
    Domain(#[from] DomainError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Syntax(_) => 2,
        }
    }
}

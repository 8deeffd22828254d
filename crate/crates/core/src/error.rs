use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter or input value is outside its valid domain.
    #[error("invalid input: {0}")]
    Input(String),
    /// A kernel evaluation hit a singular configuration (e.g. a zero-length vector).
    #[error("singular configuration: {0}")]
    Singular(String),
    /// A numerical routine failed to bracket or converge.
    #[error("numerical failure: {0}")]
    Numerical(String),
    /// The request exceeds a configured resource cap.
    #[error("resource limit: {0}")]
    Resource(String),
    /// An input file could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    /// A parsed structure violates a validity rule (e.g. self-loop in strict mode).
    #[error("validation error at line {line}: {message}")]
    Validation { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// Short machine-readable tag for the error category.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Input(_) => "input",
            Error::Singular(_) => "singular",
            Error::Numerical(_) => "numerical",
            Error::Resource(_) => "resource",
            Error::Parse { .. } => "parse",
            Error::Validation { .. } => "validation",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

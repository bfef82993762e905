use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an operation's input was violated.
    #[error("input error: {0}")]
    Input(String),

    /// A parameter was requested for fewer colours than the chromatic number.
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// Malformed graph6 / edge list / hypergraph JSON input.
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    /// A solver hit its time budget before finishing; no value is reported.
    #[error("budget exhausted")]
    BudgetExhausted,

    #[error("unknown check: {0}")]
    UnknownCheck(String),

    #[error("unknown predicate: {0}")]
    UnknownPredicate(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn infeasible(msg: impl Into<String>) -> Self {
        Error::Infeasible(msg.into())
    }

    /// Stable machine-readable tag, used by the CLI error object.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Input(_) => "input",
            Error::Infeasible(_) => "infeasible",
            Error::Parse { .. } => "parse",
            Error::BudgetExhausted => "budget-exhausted",
            Error::UnknownCheck(_) => "unknown-check",
            Error::UnknownPredicate(_) => "unknown-predicate",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use std::fmt;

use hadamard::Error;

pub const EXIT_OTHER: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_TABLES: i32 = 4;
pub const EXIT_CHAIN: i32 = 5;

/// A diagnostic and the exit status it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn validation(message: impl Into<String>) -> Self {
        Failure { code: EXIT_VALIDATION, message: message.into() }
    }

    pub fn other(message: impl Into<String>) -> Self {
        Failure { code: EXIT_OTHER, message: message.into() }
    }

    /// Maps a library error raised while handling `field`.
    pub fn from_core(field: &str, err: Error) -> Self {
        let code = match err {
            Error::BudgetExhausted { .. } => EXIT_BUDGET,
            Error::NonFiniteIntegrand { .. } => EXIT_OTHER,
            _ => EXIT_VALIDATION,
        };
        Failure { code, message: format!("{field}: {err}") }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

/// `result.field("weights")?`
pub trait Context<T> {
    fn field(self, name: &str) -> Result<T, Failure>;
}

impl<T> Context<T> for hadamard::Result<T> {
    fn field(self, name: &str) -> Result<T, Failure> {
        self.map_err(|e| Failure::from_core(name, e))
    }
}

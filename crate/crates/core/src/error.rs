use thiserror::Error;

/// Errors raised by construction, validation and the exhaustive solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} = {value} is out of range (expected {expected})")]
    Range {
        what: &'static str,
        value: u64,
        expected: String,
    },

    #[error("integer overflow: {0}")]
    Overflow(String),

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("infeasible input: {0}")]
    InfeasibleInput(String),

    #[error("search too large: {size} assignments exceeds the budget of {budget}")]
    BudgetExceeded { size: u128, budget: u64 },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn range(what: &'static str, value: u64, expected: impl Into<String>) -> Self {
        Error::Range {
            what,
            value,
            expected: expected.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use std::fmt;

use thiserror::Error;

/// Errors raised by the modelling, pivoting and oracle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable `{0}` is declared free; only nonnegative variables are supported")]
    UnsupportedFreeVariable(String),
    #[error("problem has no constraints")]
    EmptyProblem,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("duplicate constraint name `{0}`")]
    DuplicateConstraint(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("division by a zero-classified value")]
    DivisionByZero,
    #[error("pivot element at row {row}, column {col} is zero")]
    ZeroPivot { row: usize, col: usize },
    #[error("index out of range: row {row}, column {col}")]
    IndexOutOfRange { row: usize, col: usize },
    #[error("no eligible leaving row for entering column {col}")]
    NoEligibleRow { col: usize },
    #[error("dictionary is not primal feasible (row {row} has a negative right-hand side)")]
    NotPrimalFeasible { row: usize },
    #[error("tolerance must be a positive finite number, got {0}")]
    InvalidTolerance(String),
    #[error("vertex enumeration would visit {bases} bases (limit {limit})")]
    TooLarge { bases: u128, limit: u128 },
    #[error("methods disagree on feasibility: artificial-free says {af}, traditional says {traditional}")]
    VerdictMismatch { af: String, traditional: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A syntax error in LP source text, with 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid move: ({0}, {1}) is the zero vector")]
    InvalidMove(i64, i64),
    #[error("a piece needs at least one basic move")]
    EmptyPiece,
    #[error("moves ({0}, {1}) and ({2}, {3}) are parallel")]
    DuplicateDirection(i64, i64, i64, i64),
    #[error("unknown piece name `{0}`")]
    UnknownPiece(String),
    #[error("invalid board: {0}")]
    InvalidBoard(String),
    #[error("point ({0}, {1}) is not on the board boundary")]
    NotOnBoundary(String, String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("insufficient data: need {needed} table entries, have {have}")]
    InsufficientData { needed: usize, have: usize },
    #[error("no period up to {0} fits the data")]
    NoPeriodFits(usize),
    #[error("search budget of {0} solved systems exceeded")]
    BudgetExceeded(u64),
    #[error("integer overflow in exact elimination")]
    Overflow,
    #[error("construction failed: {0}")]
    ConstructionFailure(String),
    #[error("negative Fibonacci index {0}")]
    NegativeIndex(i64),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Invariant` is special: it marks a mathematical consistency check that
/// failed inside the library. Seeing it means a computation route produced
/// a value its independent counterpart disagrees with, which is a bug, not
/// a bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} exceeds the configured cap of {cap}")]
    IndexCapExceeded { index: i64, cap: u64 },

    #[error("seed pair (0, 0) is degenerate")]
    DegenerateSeeds,

    #[error("division by zero in Q(sqrt(5))")]
    DivisionByZero,

    #[error("zero raised to a negative power")]
    ZeroToNegativePower,

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("grid order {order} exceeds the display cap of {cap}")]
    DisplayCapExceeded { order: u32, cap: u32 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

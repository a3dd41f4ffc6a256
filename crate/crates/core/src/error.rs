use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LrcError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field size {0} is outside the supported range 2..=512")]
    FieldTooLarge(u64),
    #[error("invalid modulus for GF({q}): {reason}")]
    InvalidModulus { q: u32, reason: String },
    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),
    #[error("entry {value} is not an element of GF({q})")]
    InvalidElement { q: u32, value: u64 },
    #[error("ragged generator rows: expected length {expected}, found {found}")]
    RaggedRows { expected: usize, found: usize },
    #[error("enumeration of {needed} items exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("projection onto an empty coordinate set")]
    EmptyProjection,
    #[error("coordinate {coord} is out of range for length {n}")]
    CoordinateOutOfRange { coord: usize, n: usize },
    #[error("coordinate set {inner} is not a subset of {outer}")]
    NotSubset { inner: String, outer: String },
    #[error("code is degenerate: coordinate {0} is zero in every codeword")]
    Degenerate(usize),
    #[error("expected an integral value, got {0}")]
    NonIntegral(String),
    #[error("expected a non-negative value, got {0}")]
    Negative(String),
    #[error("missing refined weight table entry for {0}")]
    MissingTableEntry(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("no k_opt entry for q={q}, n={n}, d={d}")]
    KoptMiss { q: u32, n: usize, d: usize },
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, LrcError>;

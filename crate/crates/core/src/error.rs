use thiserror::Error;

pub type Result<T, E = OrnatedError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum OrnatedError {
    #[error("vertex count must be at least 1")]
    ZeroOrder,

    #[error("operation requires a non-empty ordered string")]
    EmptyString,

    #[error("operation requires a non-empty list of ordered strings")]
    EmptyStringList,

    #[error("malformed ordered string {0:?}: expected comma-separated non-negative integers")]
    InvalidString(String),

    #[error("vertex index {index} out of range 1..={max}")]
    VertexOutOfRange { index: usize, max: usize },

    #[error("dimension mismatch: {left} vs {right} vertices")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NonSquare { row: usize, len: usize, expected: usize },

    #[error("matrix has a non-zero diagonal entry at v{0}")]
    Loop(usize),

    #[error("order {n} is below the Kyle order {kyle_order}")]
    BelowKyleOrder { n: usize, kyle_order: usize },

    #[error("graph carries no string provenance; the maximum entry is unknown")]
    NoProvenance,

    #[error("order {0} is too small for this operation")]
    OrderTooSmall(usize),

    #[error("NotOrnated: {0}")]
    NotOrnated(String),

    #[error("bad bounds: {0}")]
    BadBounds(String),

    #[error("resource budget exceeded: {required} candidates exceed the budget of {budget}")]
    Budget { required: u128, budget: u128 },

    #[error("malformed graph document: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

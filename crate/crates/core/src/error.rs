use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group spec `{0}` (expected C<q> with q >= 2, A<m> with 3 <= m <= 7, or PSL27)")]
    InvalidGroupSpec(String),

    #[error("group order {order} exceeds the table cap {cap}")]
    OrderCapExceeded { order: u64, cap: u64 },

    #[error("catalog bound {0} outside the supported range 2..=10080")]
    CatalogBound(u64),

    #[error("unknown group name `{0}`")]
    UnknownGroup(String),

    #[error("vertex count must be at least 3, got {0}")]
    TooFewVertices(u32),

    #[error("invalid complex data: {0}")]
    ComplexFormat(String),

    #[error("invalid cochain data: {0}")]
    CochainFormat(String),

    #[error("enumeration exceeded the limit of {0} results")]
    EnumerationTruncated(usize),

    #[error("search exceeded its node budget of {0}")]
    BudgetExhausted(u64),

    #[error("exhaustive verification infeasible: {0}")]
    Infeasible(String),

    #[error("invalid experiment config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

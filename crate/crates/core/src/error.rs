use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("({u}, {v}) is not an edge of K_{n}: need 1 <= u < v <= n")]
    InvalidEdge { n: u32, u: u32, v: u32 },

    #[error("edge index {index} is outside [1, {eps}]")]
    IndexOutOfRange { index: u64, eps: u64 },

    #[error("labels are not a bijection onto [1, {eps}]: {detail}")]
    NotBijection { eps: u64, detail: String },

    #[error("malformed labeling file: {0}")]
    Malformed(String),

    #[error("order mismatch: expected K_{expected}, found K_{found}")]
    OrderMismatch { expected: u32, found: u32 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "search budget of {budget} steps exhausted looking for a supermagic labeling of K_{{{parts}[2]}}; \
         supply a labeling file or a warm cache directory instead"
    )]
    BudgetExhausted { parts: u32, budget: u64 },

    #[error("input labeling is not {b}-astray good: {detail}")]
    NotAstrayGood { b: u32, detail: String },

    #[error("internal construction error: {0}")]
    Internal(String),

    #[error("edge count {eps} exceeds the oracle cap {cap} (raise it with --cap)")]
    CapExceeded { eps: u64, cap: u64 },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

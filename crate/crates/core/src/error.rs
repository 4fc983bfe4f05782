use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("derivative order {n} exceeds the cap {cap}")]
    CapExceeded { n: u32, cap: u32 },

    #[error("index error: {0}")]
    Index(String),

    #[error("not applicable: {0}")]
    Applicability(String),

    #[error("precondition violated: {what} (requires nu >= {required})")]
    Precondition { what: String, required: f64 },

    #[error("regime error: {0}")]
    Regime(String),

    #[error("no convergence: {0}")]
    Convergence(String),

    #[error("zero not found: {0}")]
    NotFound(String),

    #[error("coefficient table cross-check failed at (m={m}, n={n})")]
    Build { m: usize, n: usize },

    #[error("construction check failed: {0}")]
    Verification(String),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

use thiserror::Error;

/// Errors produced by the counting, bound, and sampling layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("degenerate ambient space: {points} points is too small for cardinality {size}")]
    DegenerateAmbientSpace { points: u64, size: u64 },

    #[error("work limit exceeded while {what}: needs about {needed}, budget is {budget}")]
    WorkLimitExceeded {
        what: &'static str,
        needed: String,
        budget: u64,
    },

    #[error("ambient spaces do not match: {0}")]
    AmbientMismatch(String),

    #[error("left degree must be positive")]
    ZeroDegree,

    #[error("association profile is invalid: {0}")]
    InvalidProfile(String),

    #[error("lower bound inapplicable: the top co-neighborhood count is zero")]
    LowerBoundInapplicable,

    #[error("field of order {q} exceeds the table-backed limit of 2^20")]
    FieldTooLarge { q: u64 },

    #[error("i/o failure: {0}")]
    Io(String),
}

impl Error {
    pub fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

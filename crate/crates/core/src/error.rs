use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {0} is not supported (must be between 1 and 255)")]
    UnsupportedDegree(usize),

    #[error("images do not form a bijection on {0} points")]
    NotABijection(usize),

    #[error("malformed cycle notation at byte {offset}: {reason}")]
    Malformed { offset: usize, reason: String },

    #[error("point {point} appears more than once")]
    RepeatedPoint { point: usize },

    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("malformed cycle type {0:?}")]
    MalformedCycleType(String),

    #[error("cycle type {cycle_type} does not fit on {degree} points")]
    CycleTypeTooLarge { cycle_type: String, degree: usize },

    #[error("cycle type {0} is odd and has no class in the alternating group")]
    OddClassInAlt(String),

    #[error("closure exceeds the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("search budget of {limit} exhausted")]
    BudgetExhausted { limit: u64 },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("{0}")]
    Mismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

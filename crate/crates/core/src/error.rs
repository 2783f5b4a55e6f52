use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("empty generator list (use GroupHandle::trivial for the trivial group)")]
    EmptyGenerators,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what} exceeds cap ({value} > {cap})")]
    CapExceeded { what: String, value: String, cap: String },

    #[error("not a subgroup: generator {index} of the candidate is not in the ambient group")]
    NotSubgroup { index: usize },

    #[error("subgroup is not normal: conjugate {witness} is outside it")]
    NotNormal { witness: String },

    #[error("group is intransitive; orbits: {orbits:?}")]
    Intransitive { orbits: Vec<Vec<u32>> },

    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("internal construction failure: {0}")]
    Internal(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("point {point} out of range for degree {degree} (line {line})")]
    PointOutOfRange { point: usize, degree: usize, line: usize },

    #[error("missing `degree N` line")]
    MissingDegree,

    #[error("bound data: {0}")]
    BoundData(String),

    #[error("class sizes sum to {found}, group order is {expected}")]
    SizeSum { expected: String, found: String },

    #[error("Burnside sum violated for column {column}: sum of size*value is {found}, group order is {expected}")]
    BurnsideSum {
        column: String,
        expected: String,
        found: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn cap(what: impl Into<String>, value: impl ToString, cap: impl ToString) -> Self {
        Error::CapExceeded {
            what: what.into(),
            value: value.to_string(),
            cap: cap.to_string(),
        }
    }

    /// True for errors caused by running out of a search budget or size cap,
    /// as opposed to malformed input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExhausted(_) | Error::CapExceeded { .. })
    }
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the domain of a scalar function.
    #[error("{func}: argument {value} outside domain ({reason})")]
    Domain {
        func: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// Family or model parameter rejected before any computation.
    #[error("invalid parameter {name}: {reason}")]
    Parameter { name: &'static str, reason: String },

    /// A degree-wise inverse factor vanished on the given monomial degree.
    #[error("{op} is degenerate on degree {degree}")]
    Degenerate { op: &'static str, degree: usize },

    #[error("operation expects a {expected} state")]
    FamilyMismatch { expected: &'static str },

    #[error("level weights must be non-negative and sum to 1 (sum = {sum})")]
    WeightNormalization { sum: f64 },

    #[error("autocorrelation trace is empty")]
    EmptyTrace,
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::Parameter {
            name,
            reason: reason.into(),
        }
    }
}

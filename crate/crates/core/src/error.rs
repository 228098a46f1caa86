use thiserror::Error;

/// Errors raised by semigroup, complex and construction routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The generators share a common factor but a numerical semigroup was required.
    #[error("generators have gcd {content}; a numerical semigroup needs gcd 1")]
    NonNumerical { content: i64 },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("gluing hypothesis failed: {0}")]
    GluingHypothesis(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("construction verification failed: {0}")]
    ConstructionVerification(String),

    #[error("complex is not a fat tree")]
    NotFatTree,

    #[error("not a fat forest: {0}")]
    NotFatForest(String),

    #[error("retry budget of {attempts} attempts exhausted: {last}")]
    RetryExhausted { attempts: usize, last: String },
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "InvalidInput",
            Error::NonNumerical { .. } => "NonNumericalError",
            Error::Overflow(_) => "Overflow",
            Error::GluingHypothesis(_) => "GluingHypothesisError",
            Error::Precondition(_) => "PreconditionError",
            Error::ConstructionVerification(_) => "ConstructionVerificationError",
            Error::NotFatTree => "NotFatTree",
            Error::NotFatForest(_) => "NotFatForest",
            Error::RetryExhausted { .. } => "RetryExhausted",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

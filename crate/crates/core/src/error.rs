use thiserror::Error;

/// Errors raised by the engine. The variant name is what the CLI reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("element length would exceed the cap of {cap}")]
    LengthCapExceeded { cap: usize },
    #[error("interval of an element of length {length} exceeds the enumeration bound {bound}")]
    IntervalTooLarge { length: usize, bound: usize },
    #[error("{0} is not a minimal coset representative")]
    NotMinimalRep(String),
    #[error("coset of {x} does not meet the interval below {w}")]
    EmptyIntersection { x: String, w: String },
    #[error("expected J to be a subset of K")]
    BadSubsetChain,
    #[error("internal assertion failed: {0}")]
    InternalAssertionFailed(String),
    #[error("maximal element of the coset is not unique")]
    NotUnique,
    #[error("rewrite search exceeded its budget of {0} words")]
    SearchBudgetExceeded(usize),
    #[error("polynomial coefficient overflow")]
    Overflow,
}

impl Error {
    /// Stable name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidMatrix(_) => "InvalidMatrix",
            Error::UnknownGenerator(_) => "UnknownGenerator",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::LengthCapExceeded { .. } => "LengthCapExceeded",
            Error::IntervalTooLarge { .. } => "IntervalTooLarge",
            Error::NotMinimalRep(_) => "NotMinimalRep",
            Error::EmptyIntersection { .. } => "EmptyIntersection",
            Error::BadSubsetChain => "BadSubsetChain",
            Error::InternalAssertionFailed(_) => "InternalAssertionFailed",
            Error::NotUnique => "NotUnique",
            Error::SearchBudgetExceeded(_) => "SearchBudgetExceeded",
            Error::Overflow => "Overflow",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational literal {0:?}")]
    ParseRational(String),

    #[error("malformed eigenvalue {0:?}: expected \"inf\" or a rational literal")]
    ParseEigenvalue(String),

    #[error("degree of the zero homogeneous polynomial is undefined")]
    DegreeOfZero,

    #[error("sequence is not nonincreasing: {0:?}")]
    NotNonincreasing(Vec<usize>),

    #[error("head {head} is smaller than the first tail part {first}")]
    HeadTooSmall { head: usize, first: usize },

    #[error("length mismatch: {what} (got {left} and {right})")]
    LengthMismatch {
        what: &'static str,
        left: usize,
        right: usize,
    },

    #[error("index computation needs unequal inputs")]
    EqualInputs,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid invariants: {0}")]
    InvalidInvariants(String),

    #[error("invariant factor does not split over the rationals; irreducible factor {0}")]
    NonSplitting(String),

    #[error("pencils have different sizes: {0}x{1} vs {2}x{3}")]
    SizeMismatch(usize, usize, usize, usize),

    #[error("lemma hypothesis not satisfied: {0}")]
    HypothesisNotSatisfied(String),
}

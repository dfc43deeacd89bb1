use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("negative multiplicity {mult} for {label} in {context}")]
    NegativeMultiplicity {
        label: String,
        mult: i64,
        context: &'static str,
    },

    #[error("series has a nonzero constant term; Exp does not converge t-adically")]
    NonzeroConstantTerm,

    #[error("series flavor does not fit the operation")]
    FlavorMismatch,

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),

    #[error("ambient dimension {needed} exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("pairs are not comparable: {0}")]
    Incomparable(String),

    #[error("character is not a nonnegative combination of irreducibles: {0}")]
    NotDecomposable(String),
}

pub type Result<T> = std::result::Result<T, Error>;

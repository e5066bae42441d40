//! Error types, one enum per layer.

use crate::series::{NearlyHolomorphicForm, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("ungraded addition of weight {left} and weight {right}")]
    WeightMismatch { left: i64, right: i64 },
    #[error("form has no definite weight")]
    MissingWeight,
    #[error("q-exponent {n} exceeds truncation {truncation}")]
    BeyondTruncation { n: usize, truncation: usize },
    #[error("malformed form file: {0}")]
    Format(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OperatorError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("the zero form has no infinitesimal character")]
    ZeroForm,
    #[error("form is not a Casimir eigenvector")]
    NotEigenform { residual: Box<NearlyHolomorphicForm> },
    #[error("Casimir eigenvalue {eigenvalue} has no rational λ")]
    IrrationalCharacter { eigenvalue: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompositionError {
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("not decomposable over supplied basis (weight {weight}, depth {depth})")]
    NotDecomposable { weight: i64, depth: usize, residual: Box<NearlyHolomorphicForm> },
    #[error("truncation {have} is below the bound {needed} needed to detect weight {weight}")]
    InsufficientTruncation { weight: i64, needed: usize, have: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("{0} is outside the certified domain")]
    OutOfDomain(String),
    #[error("no built-in L-ratio at s0 = {point} for {character}; supply ramified_L_data")]
    NeedsLData { point: Rational, character: String },
    #[error("character parity {parity} does not match weight {k}")]
    ParityMismatch { k: i64, parity: i8 },
    #[error("insufficient Laurent precision: {0}")]
    InsufficientPrecision(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuadraticError {
    #[error("Hilbert symbol with a zero argument")]
    ZeroArgument,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("ε = -1 at {place}, where the discriminant is a local square")]
    InvariantViolation { place: String },
    #[error("outside the certified domain: {0}")]
    OutOfDomain(String),
    #[error("inconsistent character descriptor: {0}")]
    InconsistentDescriptor(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CategoryError {
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error("ambiguous module: candidates {candidates:?}")]
    Ambiguous { candidates: Vec<String> },
    #[error("form does not generate a module in the known class list: {0}")]
    Unmatched(String),
}

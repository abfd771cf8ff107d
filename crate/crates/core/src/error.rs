use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("power product does not divide")]
    NotDivisible,
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("ordering {0} is not admissible")]
    NonAdmissibleOrdering(&'static str),
    #[error("power product is not in the support of the polynomial")]
    NotInSupport,
    #[error("monomial is irreducible")]
    Irreducible,
    #[error(
        "selection strategy returned generator {0}, whose leading power product does not divide"
    )]
    InvalidReducer(usize),
    #[error("branch enumeration exceeded the budget of {0} nodes")]
    BudgetExhausted(usize),
    #[error("cycle in reduction graph")]
    CycleDetected,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    Bench(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

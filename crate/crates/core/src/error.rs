use thiserror::Error;

/// Errors raised across the toolkit.
///
/// Variants carry a human-readable description of the violated condition so
/// that the CLI can name the failed hypothesis verbatim.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("field of order {order} exceeds the desk-scale limit {limit}")]
    FieldTooLarge { order: u64, limit: u64 },
    #[error("degree {r} does not divide {n}")]
    NonDivisorDegree { n: u32, r: u32 },
    #[error("element does not lie in the subfield GF(q^{0})")]
    NotInSubfield(u32),
    #[error("exponent is not an integer: {0}")]
    NonIntegerExponent(String),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("basis elements are GF(q)-linearly dependent")]
    DependentBasis,
    #[error("scaling element must be nonzero")]
    ZeroScalar,
    #[error("parameter violation: {0}")]
    ParamViolation(String),
    #[error("evaluation points are GF(q)-linearly dependent")]
    DependentPoints,
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("enumeration of {needed} items exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("degenerate code: {0}")]
    DegenerateCode(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("containment failure: {0}")]
    ContainmentFailure(String),
    #[error("family member outside the prescribed support: {0}")]
    FamilyNotInPol(String),
    #[error("negative radicand {0}: parameters outside the bound's range")]
    NegativeRadicand(f64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors that report a violated precondition of a theorem or
    /// construction, as opposed to malformed input or I/O trouble.
    pub fn is_hypothesis(&self) -> bool {
        matches!(
            self,
            Error::HypothesisViolation(_)
                | Error::ParamViolation(_)
                | Error::FamilyNotInPol(_)
                | Error::NegativeRadicand(_)
        )
    }
}

use thiserror::Error;

/// Errors raised by the engines.
///
/// Vanishing coefficients are never errors; they are ordinary zero values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition of length {length} does not fit in {height} rows")]
    LengthExceedsBox { length: usize, height: usize },

    #[error("sequence has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("polynomials have different arity ({left} vs {right})")]
    ArityMismatch { left: usize, right: usize },

    #[error("division is not exact")]
    InexactDivision,

    #[error("zero polynomial has no leading monomial")]
    ZeroPolynomial,

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("weights differ ({left} vs {right})")]
    WeightMismatch { left: usize, right: usize },

    #[error("expansion has a non-integral coefficient {value} at {key}")]
    NonIntegralResult { key: String, value: String },

    #[error("arity {arity} is smaller than the length {length} of {name}")]
    ArityTooSmall {
        name: &'static str,
        arity: usize,
        length: usize,
    },

    #[error("rule {rule} does not apply: {clause}")]
    PreconditionViolated { rule: String, clause: String },

    #[error("expected {expected} indices, got {found}")]
    IndexCount { expected: usize, found: usize },

    #[error("invalid partition `{0}`")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors raised across the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed scalar `{0}`")]
    MalformedScalar(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("imaginary term outside the Gaussian rationals: `{0}`")]
    ImaginaryOutsideGaussian(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("not supported in characteristic {characteristic}: {what}")]
    PositiveCharacteristic { characteristic: u64, what: String },
    #[error("not split over the field: {0}")]
    NotSplit(String),
    #[error("central form is degenerate: {0}")]
    DegenerateForm(String),
    #[error("form is not central: {0}")]
    NotCentral(String),
    #[error("module is not projective: {0}")]
    NotProjective(String),
    #[error("incomplete idempotent set: {0}")]
    IncompleteIdempotents(String),
    #[error("unmatched summand: {0}")]
    UnmatchedSummand(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

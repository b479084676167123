use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse rational from `{0}`")]
    ParseRational(String),

    #[error("sequence must start with coefficient 1, found {0}")]
    LeadingCoefficientNotOne(String),

    #[error("sequence index {index} out of range (length {len})")]
    OutOfRange { index: usize, len: usize },

    #[error("seed sequence is empty")]
    EmptySeed,

    #[error("index n = {n} lies below the support start m = {m}")]
    BelowSupport { n: usize, m: usize },

    #[error("recurrence for n = {n} starts at n = {start}")]
    BelowRecurrenceStart { n: usize, start: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("independent evaluation routes disagree: {0}")]
    RouteDisagreement(String),

    #[error("invalid seed file: {0}")]
    SeedFile(String),

    #[error("{0}")]
    NonIntegerOutput(String),
}

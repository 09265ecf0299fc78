use thiserror::Error;

use crate::truncpoly::RestrictionViolation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidSpec(String),

    #[error("class label {label} is not valid for {spec}: {reason}")]
    LabelMismatch {
        label: String,
        spec: String,
        reason: String,
    },

    #[error("{what} = {value} is out of range ({range})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },

    #[error("guard exceeded: {what} has size {size}, limit is {limit}")]
    GuardExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("inverse of zero in F_{0}")]
    InverseOfZero(u64),

    #[error("weight is not strongly q-restricted: {0}")]
    NotStronglyRestricted(RestrictionViolation),

    #[error("unsupported weight: {0}")]
    UnsupportedWeight(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by field construction, polynomial arithmetic and the
/// classification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic 2 is not supported (p must be an odd prime)")]
    EvenPrime,
    #[error("{0} is not prime")]
    Composite(u64),
    #[error("{p}^{e} does not fit in 64 bits")]
    Overflow { p: u64, e: u32 },
    #[error("polynomials over F_{0} and F_{1} cannot be combined")]
    MixedCharacteristic(u64, u64),
    #[error("exponent overflow: result exceeds 64 bits")]
    ExponentOverflow,
    #[error("polynomial has a constant term; DO detection requires constant-free input")]
    ConstantTermPresent,
    #[error("index n = {0} is below 2")]
    BadIndex(u64),
    #[error("unknown catalog item {0}")]
    UnknownItem(String),
    #[error("field of order {q} exceeds the exhaustive-check cap {cap}")]
    FieldTooLarge { q: u64, cap: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

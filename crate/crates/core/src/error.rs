use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    InvalidPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` already exists in the ring")]
    VariableCollision(String),
    #[error("ideal power with exponent 0 is not defined here")]
    ZeroPower,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ideal is not homogeneous for the given weights")]
    NotHomogeneous,
    #[error("graded slice is infinite-dimensional over the coefficient field")]
    InfiniteSlice,
    #[error("the ideal {0} is not proper")]
    NotProper(String),
    #[error("maximal ideal does not have a rational residue field: {0}")]
    NonRationalPoint(String),
    #[error("map is not well defined: relation {0} does not map to zero")]
    IllDefinedMap(usize),
    #[error("submodule is not contained: {0}")]
    NotContained(String),
    #[error("operation requires characteristic 0, got characteristic {0}")]
    PositiveCharacteristic(u64),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("outside family locus: {0}")]
    OutsideLocus(String),
    #[error("gcd undefined for two zero polynomials")]
    GcdUndefined,
    #[error("curve is singular")]
    Singular,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("pairing is restriction of a curve isomorphism")]
    IsomorphismRestriction,
    #[error("unexpected common factor: {0}")]
    CommonFactor(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

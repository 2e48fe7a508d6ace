use thiserror::Error;

/// Errors raised by graph construction, validation, bounds and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph: {0}")]
    MalformedGraph(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("bad permutation: {0}")]
    BadPermutation(String),
    #[error("numeric instability: {0}")]
    NumericInstability(String),
    #[error("unsupported diameter k = {0}")]
    UnsupportedK(u32),
    #[error("unsupported n = {0} (need n >= 3)")]
    UnsupportedN(u32),
    #[error("unsupported m = {0}")]
    UnsupportedM(usize),
    #[error("parity error: {0}")]
    ParityError(String),
    #[error("inexact division by 5: {0}")]
    NonDivisible(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("malformed voltage base graph: {0}")]
    MalformedBase(String),
    #[error("root iteration did not converge: {0}")]
    NoConvergence(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

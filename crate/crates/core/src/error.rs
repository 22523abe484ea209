use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("pole at s = {0}")]
    Pole(String),
    #[error("argument outside domain: {0}")]
    Domain(String),
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),
    #[error("unsupported degree m = {0} (closed forms exist for m <= 4)")]
    UnsupportedDegree(u32),
    #[error("dual construction mismatch: {0}")]
    Consistency(String),
    #[error("no convergence: {0}")]
    NoConvergence(String),
    #[error("divergent integral: {0}")]
    DivergentInput(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid precision: {0}")]
    Precision(String),
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

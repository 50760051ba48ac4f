//! Crate-wide error type.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Vector or matrix dimensions do not match the operation's contract.
    DimensionMismatch { expected: usize, got: usize, what: &'static str },
    /// A basis function produced a non-finite value; carries the component index.
    NonFiniteBasis { index: usize },
    /// A signal entering the pipeline was non-finite.
    NonFiniteInput { what: &'static str },
    /// An estimator update produced a non-finite parameter matrix.
    NonFiniteUpdate { method: &'static str },
    /// An estimator diverged during a benchmark run.
    Divergence { method: &'static str, step: usize },
    /// A scalar parameter is outside its admissible domain.
    Domain { what: &'static str, detail: String },
    /// Matrix expected to be symmetric is not (asymmetry above tolerance).
    NotSymmetric { asymmetry: f64 },
    /// Rank condition violated where the operation requires λmin(S) > 0.
    RankCondition,
    /// Root finder could not bracket a sign change.
    NoBracket,
    /// Settling-time bound inapplicable for the given inputs.
    BoundInapplicable { detail: String },
    /// Config file problem; carries line number (1-based) when known.
    Config { line: Option<usize>, detail: String },
    /// I/O error wrapper.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, got, what } => {
                write!(f, "dimension mismatch in {what}: expected {expected}, got {got}")
            }
            Error::NonFiniteBasis { index } => {
                write!(f, "basis output is not finite at component {index}")
            }
            Error::NonFiniteInput { what } => write!(f, "non-finite input: {what}"),
            Error::NonFiniteUpdate { method } => {
                write!(f, "{method} update produced non-finite parameters")
            }
            Error::Divergence { method, step } => {
                write!(f, "{method} diverged at step {step}")
            }
            Error::Domain { what, detail } => write!(f, "invalid {what}: {detail}"),
            Error::NotSymmetric { asymmetry } => {
                write!(f, "matrix is not symmetric (asymmetry {asymmetry:e})")
            }
            Error::RankCondition => write!(f, "rank condition violated: lambda_min(S) <= 0"),
            Error::NoBracket => write!(f, "root finder failed to bracket a sign change"),
            Error::BoundInapplicable { detail } => write!(f, "bound inapplicable: {detail}"),
            Error::Config { line: Some(n), detail } => write!(f, "config line {n}: {detail}"),
            Error::Config { line: None, detail } => write!(f, "config: {detail}"),
            Error::Io(e) => write!(f, "io: {e}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("inner series must have zero constant term")]
    NonzeroConstantTerm,
    #[error("series must be normalized as z + a2 z^2 + ...")]
    NotNormalized,
    #[error("Schur parameter {index} lies outside the closed unit disk (|gamma| = {modulus})")]
    ParameterOutsideDisk { index: usize, modulus: f64 },
    #[error("coefficients ({c1}, {c2}, {c3}) are not attained by any Schwarz function")]
    InadmissibleTriple { c1: String, c2: String, c3: String },
    #[error("parameter recovery needs |c1| < 1 and |c2| < 1 - |c1|^2")]
    DegenerateRecovery,
    #[error("sigma/mu undefined: B1 = 0")]
    UndefinedSigmaMu,
    #[error("{0} has no (sigma, mu) pair")]
    NoSigmaMu(&'static str),
    #[error("hypothesis not satisfied: {0}")]
    HypothesisNotSatisfied(String),
    #[error("invalid phi data: {0}")]
    InvalidPhi(String),
    #[error("catalog parameter out of range: {0}")]
    ParameterOutOfRange(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

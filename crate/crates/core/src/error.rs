use thiserror::Error;

use crate::coeffs::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("valuation {0} is negative, element is outside the valuation ring")]
    NegativeValuation(Rational),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("weight entry `{0}` is not a rational number")]
    IrrationalWeight(String),
    #[error("generator {0} is not homogeneous")]
    NonHomogeneousGenerator(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("every lift is infinite")]
    NoFiniteLift,
    #[error("{count} index sets exceed the minor cap of {cap}")]
    MinorExplosion { count: String, cap: usize },
    #[error("d_max = {d_max} is below the largest generator degree {max_degree}")]
    DegreeTooSmall { d_max: u32, max_degree: u32 },
    #[error("cell limit of {0} exceeded")]
    CellLimit(usize),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("certification failed at {}: {message}", fmt_point(.counterexample))]
    CertificationFailed {
        counterexample: Vec<Rational>,
        message: String,
    },
    #[error("projection ideal has {generators} generators, not one")]
    NotPrincipal { generators: usize },
    #[error("invalid complex description: {0}")]
    InvalidComplex(String),
}

fn fmt_point(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(|q| q.to_string()).collect();
    format!("({})", parts.join(", "))
}

use thiserror::Error;

use crate::apostol::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("series constant term is not a unit")]
    NotAUnit,
    #[error("lambda={lambda} invalid for {family}")]
    InvalidLambda { family: Family, lambda: String },
    #[error("rho=-1 is not allowed (division by 1+rho)")]
    InvalidRho,
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("cannot parse {kind} from {input:?}")]
    Parse { kind: &'static str, input: String },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use alloc::string::String;

use num_complex::Complex64;
use thiserror::Error;

use crate::poly::MultiIndex;
use crate::properness::Verdict;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("domain dimensions differ ({left} vs {right})")]
    DomainMismatch { left: usize, right: usize },
    #[error("denominator must satisfy q(0) = 1, found q(0) = {constant}")]
    DenominatorNotNormalized { constant: Complex64 },
    #[error("denominator nearly vanishes on the closed ball (|q| = {modulus:e})")]
    DenominatorVanishes { modulus: f64 },
    #[error("point has norm {norm}, expected < 1")]
    PointOutsideBall { norm: f64 },
    #[error("point has norm {norm}, expected exactly 1")]
    PointNotOnSphere { norm: f64 },
    #[error("matrix is not unitary (deviation {deviation:e})")]
    NotUnitary { deviation: f64 },
    #[error("subspace basis is empty")]
    EmptySubspace,
    #[error("basis is not orthonormal (deviation {deviation:e})")]
    NotOrthonormal { deviation: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("map must have domain and target dimension 1")]
    NotOneDimensional,
    #[error("winding integral {value} is not an integer")]
    NonIntegralWinding { value: Complex64 },
    #[error("map at t = {t} is not proper ({verdict:?}, residual {residual:e})")]
    PropernessFailure { t: f64, verdict: Verdict, residual: f64 },
    #[error("constructed map is not proper ({verdict:?}, residual {residual:e})")]
    NotProper { verdict: Verdict, residual: f64 },
    #[error("{end} endpoint is not norm-equivalent to the declared map")]
    EndpointMismatch { end: &'static str },
    #[error("grid size must be at least 2, got {0}")]
    InvalidGrid(usize),
    #[error("map is not monomial")]
    NotMonomial,
    #[error("not in the tensor image: siblings of {monomial} missing or unequal")]
    NotTensorImage { monomial: MultiIndex },
    #[error("point is a pole of the map")]
    EvaluationAtPole,
}

pub type Result<T> = core::result::Result<T, Error>;

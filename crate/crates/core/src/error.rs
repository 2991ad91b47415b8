use thiserror::Error;

use crate::fe::ElementPair;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("subdivision count must be at least 1")]
    EmptySubdivision,
    #[error("no {kind} quadrature rule of degree {degree} (supported: 1..=12)")]
    UnsupportedQuadrature { kind: &'static str, degree: usize },
    #[error("cell index {0} is out of range")]
    CellOutOfRange(usize),
    #[error("pressure-robust {0} needs a vertex-patch reconstruction, which is not implemented")]
    UnsupportedReconstruction(ElementPair),
    #[error("reconstruction {op} does not match element pair {pair}")]
    MismatchedReconstruction { op: &'static str, pair: ElementPair },
    #[error("field has {got} coefficients, layout expects {expected}")]
    FieldLength { expected: usize, got: usize },
    #[error("problem has no exact solution")]
    MissingExactSolution,
    #[error("out of memory during the symbolic factorization")]
    OutOfMemory,
    #[error("zero pivot at step {step} of the LDL^T factorization")]
    ZeroPivot { step: usize },
    #[error("saddle-point solve stalled at relative residual {residual:e} (pivot ratio {pivot_ratio:e})")]
    NotConverged { residual: f64, pivot_ratio: f64 },
    #[error("convergence rates need at least two records with positive values")]
    RateUndefined,
    #[error("invalid study configuration: {0}")]
    InvalidConfig(&'static str),
}

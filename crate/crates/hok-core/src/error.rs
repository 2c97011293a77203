//! Error types shared across the crate.

use thiserror::Error;

/// Errors from basis construction, quadrature and transforms.
#[derive(Debug, Error)]
pub enum BasisError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("eigenvalue solver failed to converge for quadrature rule of size {size}")]
    EigenFailed { size: usize },
    #[error("quadrature rule under-resolved: orthonormality defect {defect:e} at order {order}")]
    UnderResolved { order: u32, defect: f64 },
    #[error("quadrature rule of size {size} cannot resolve expansions of order {order}")]
    RuleTooSmall { size: usize, order: u32 },
    #[error("invalid coefficient data: {0}")]
    InvalidData(String),
}

/// Errors from coefficient-space operators.
#[derive(Debug, Error)]
pub enum OperatorError {
    #[error("ladder axis {axis} out of range for dimension {dim}")]
    AxisOutOfRange { axis: i32, dim: usize },
    #[error("multiplier `{name}` is not finite at eigenvalue {lambda}")]
    SingularSymbol { name: String, lambda: f64 },
    #[error("heat evolution requires t >= 0, got {0}")]
    NegativeTime(f64),
    #[error("ladder identity fit residual {residual:e} exceeds tolerance {tolerance:e}")]
    IdentityFit { residual: f64, tolerance: f64 },
    #[error("empty ladder word")]
    EmptyWord,
}

/// Errors from kernel evaluation.
#[derive(Debug, Error)]
pub enum KernelError {
    #[error("kernel requires t > 0, got {0}")]
    InvalidTime(f64),
    #[error("propagator is singular at this argument")]
    SingularPropagator,
    #[error("argument s = {0} outside (0, 1)")]
    InvalidS(f64),
    #[error("kernel diverges on the diagonal for a <= d/2")]
    DivergentDiagonal,
    #[error("invalid kernel parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Quadrature(#[from] crate::quad1d::QuadError),
}

/// Errors from grid-based norms and transforms.
#[derive(Debug, Error)]
pub enum SpaceError {
    #[error("grid functions live on different grids")]
    GridMismatch,
    #[error("operation requires a 1-d grid")]
    NotOneDimensional,
    #[error("samples do not decay at the grid boundary (max edge value {0:e})")]
    BoundaryDecay(f64),
    #[error("grid too coarse: spacing {spacing} >= truncation {eps}")]
    TooCoarse { spacing: f64, eps: f64 },
    #[error("grid under-resolved for this expansion: l2 defect {0:e}")]
    UnderResolved(f64),
    #[error("invalid exponent p = {0}; need p >= 1")]
    InvalidExponent(f64),
    #[error(transparent)]
    Operator(#[from] OperatorError),
}

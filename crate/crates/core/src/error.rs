use num_complex::Complex64;
use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input must contain at least one value")]
    EmptyInput,
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("polynomial is not monic (leading coefficient {0})")]
    NotMonic(Complex64),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix dimension {dim} exceeds limit {max}")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error(
        "root finder did not converge after {iterations} iterations (best residual {residual:.3e})"
    )]
    RootsNonConvergence { iterations: usize, residual: f64 },
    #[error("QR iteration failed to isolate an eigenvalue within {sweeps} sweeps")]
    EigNonConvergence { sweeps: usize },
    #[error("matrix is not self-adjoint (relative defect {defect:.3e})")]
    NotHermitian { defect: f64 },
    #[error("degree {degree} is below the minimum {min} for this operation")]
    DegreeTooSmall { degree: usize, min: usize },
    #[error("mass centre nonzero (|sum of roots|/n = {mass_center:.3e})")]
    NotCentered { mass_center: f64 },
    #[error("root {0} is not real and positive")]
    NonPositiveRoot(Complex64),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

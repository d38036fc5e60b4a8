use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HilbertError {
    #[error("point must lie strictly inside the unit ball, got |x| = {norm}")]
    PointOutsideBall { norm: f64 },

    #[error("points must have dimension >= 2, got {dim}")]
    DimensionTooSmall { dim: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("coordinates must be finite")]
    NonFiniteCoordinates,

    #[error("points coincide")]
    CoincidentPoints,

    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(&'static str),

    #[error("the equal-norm form requires | |x| - |y| | <= 1e-10")]
    UnequalNorms,

    #[error("evaluation point hits the inversion pole")]
    PoleHit,

    #[error("radius {radius} does not satisfy 0 < r < 1 - |x| = {limit}")]
    RadiusTooLarge { radius: f64, limit: f64 },

    #[error("ball level must be positive, got {0}")]
    InvalidLevel(f64),

    #[error("elliptic modulus out of range: {0}")]
    ModulusOutOfRange(f64),

    #[error("argument out of range: {0}")]
    ArgumentOutOfRange(&'static str),
}

pub type Result<T> = std::result::Result<T, HilbertError>;

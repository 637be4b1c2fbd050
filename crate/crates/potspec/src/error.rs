use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("Bessel order {0} is below -1/2")]
    OrderBelowMinusHalf(f64),
    #[error("argument {0} is negative")]
    NegativeArgument(f64),
    #[error("zero search for order {order} did not converge (bracket [{lo}, {hi}])")]
    ZeroSearchFailed { order: f64, lo: f64, hi: f64 },
    #[error("Schatten exponent p = {p} unsupported: {range}")]
    UnsupportedExponent { p: f64, range: &'static str },
    #[error("series diverges for p = {p} (requires p > {threshold})")]
    DivergentSeries { p: f64, threshold: f64 },
    #[error("closed-form spectrum only available for radius 1 (got {0}); discretize instead")]
    UnsupportedRadius(f64),
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),
    #[error("polygon is self-intersecting")]
    SelfIntersecting,
    #[error("mesh too coarse: {cells} cells at h = {h} (need at least {min})")]
    MeshTooCoarse { cells: usize, h: f64, min: usize },
    #[error("dimension mismatch: operator wants {expected}D, mesh is {got}D")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("eigensolver did not converge on row {0}")]
    EigenNoConvergence(usize),
    #[error("domains differ in measure by {rel_diff:.3e} (limit 1e-10)")]
    MeasureMismatch { rel_diff: f64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

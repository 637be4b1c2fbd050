//! Fundamental-solution kernels of `-Delta` and the closed-form
//! self-interaction integrals that regularize the diagonal of the
//! discretized operator.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Which potential operator a kernel (or matrix) belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum OperatorKind {
    /// `(1/2pi) ln(1/r)` on subsets of the plane.
    Log2d,
    /// `1/(4 pi r)` on subsets of 3-space.
    Newton3d,
}

impl OperatorKind {
    pub fn dimension(&self) -> usize {
        match self {
            OperatorKind::Log2d => 2,
            OperatorKind::Newton3d => 3,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            OperatorKind::Log2d => "log2d",
            OperatorKind::Newton3d => "newton3d",
        }
    }
}

/// Kernel value at separation `r > 0`.
pub fn kernel_value(kind: OperatorKind, r: f64) -> Result<f64> {
    if r <= 0.0 {
        return Err(Error::InvalidGeometry(format!(
            "kernel evaluated at separation {r}; the diagonal must go through self_cell_integral"
        )));
    }
    Ok(match kind {
        OperatorKind::Log2d => (1.0 / r).ln() / (2.0 * PI),
        OperatorKind::Newton3d => 1.0 / (4.0 * PI * r),
    })
}

/// Integral of the kernel over the disc/ball of the given measure centered
/// at the singularity, used for the matrix diagonal.
///
/// 2D, disc of radius `r = sqrt(measure/pi)`:
///   integral of (1/2pi) ln(1/|y|) = r^2/2 ln(1/r) + r^2/4.
/// 3D, ball of radius `r = (3 measure / 4pi)^(1/3)`:
///   integral of 1/(4pi |y|) = r^2/2.
pub fn self_cell_integral(kind: OperatorKind, cell_measure: f64) -> Result<f64> {
    if cell_measure <= 0.0 {
        return Err(Error::InvalidGeometry(format!(
            "cell measure must be positive, got {cell_measure}"
        )));
    }
    Ok(match kind {
        OperatorKind::Log2d => {
            let r = (cell_measure / PI).sqrt();
            let r2 = r * r;
            0.5 * r2 * (1.0 / r).ln() + 0.25 * r2
        }
        OperatorKind::Newton3d => {
            let r = (3.0 * cell_measure / (4.0 * PI)).cbrt();
            0.5 * r * r
        }
    })
}

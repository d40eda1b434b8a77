//! Numeric thresholds for the floating-point layer.

use serde::{Deserialize, Serialize};

/// Kernel extraction and on-shell determinant/residual bound.
pub const KERNEL: f64 = 1e-10;
/// Symbolic-versus-direct evaluation bound.
pub const SPOTCHECK: f64 = 1e-12;
/// Minimum residual, relative to the amplitude norm, of a deliberately broken system.
pub const PERTURBATION: f64 = 1e-3;
/// Minimum relative determinant ten percent off shell.
pub const OFF_SHELL: f64 = 1e-4;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub kernel: f64,
    pub spotcheck: f64,
    pub perturbation: f64,
    pub off_shell: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { kernel: KERNEL, spotcheck: SPOTCHECK, perturbation: PERTURBATION, off_shell: OFF_SHELL }
    }
}

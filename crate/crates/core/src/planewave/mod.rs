//! Plane-wave checks in double precision.
//!
//! Every unknown is taken proportional to `e^{i(kξ − ωt)}`, so ∂/∂t acts as
//! −iω and ∂/∂ξ as ik. `PlaneWaveParams::omega` is the wave frequency;
//! the source slot of a component system is evaluated at mc/ħ.

mod checks;
mod symbol;

use serde::{Deserialize, Serialize};

use num_complex::Complex64;

use crate::{Error, Result};

pub use checks::{
    adjoint_duality_check, coefficient_consistency_check, direct_bilinear, dispersion_suite, field_amplitudes,
    kernel_wave, numeric_bilinear_spotcheck, perturbation_check, residual, system_matrix, CheckVerdict,
    PlaneWaveReport,
};
pub use symbol::{kernel, relative_determinant, singular_values, symbol_matrix, SymbolMatrix};

/// Speed of light and reduced Planck constant.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Units {
    pub c: f64,
    pub hbar: f64,
}

impl Default for Units {
    fn default() -> Self {
        Self { c: 1.0, hbar: 1.0 }
    }
}

impl Units {
    pub fn validate(&self) -> Result<()> {
        if !(self.c.is_finite() && self.c > 0.0) {
            return Err(Error::InvalidParams(format!("c must be positive and finite, got {}", self.c)));
        }
        if !(self.hbar.is_finite() && self.hbar > 0.0) {
            return Err(Error::InvalidParams(format!("hbar must be positive and finite, got {}", self.hbar)));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlaneWaveParams {
    pub omega: f64,
    pub k: f64,
    pub m: f64,
    pub c: f64,
    pub hbar: f64,
    /// Field amplitudes, one per leading symbol of the system, in line order.
    pub amplitude: [Complex64; 4],
}

impl PlaneWaveParams {
    pub fn new(omega: f64, k: f64, m: f64, units: Units, amplitude: [Complex64; 4]) -> Result<Self> {
        let p = Self { omega, k, m, c: units.c, hbar: units.hbar, amplitude };
        p.validate()?;
        Ok(p)
    }

    /// Parameters on the dispersion shell, on the branch selected by the sign of `branch`.
    pub fn on_shell(k: f64, m: f64, units: Units, branch: f64, amplitude: [Complex64; 4]) -> Result<Self> {
        let rest = m * units.c * units.c / units.hbar;
        let omega = (units.c * units.c * k * k + rest * rest).sqrt().copysign(branch);
        Self::new(omega, k, m, units, amplitude)
    }

    pub fn validate(&self) -> Result<()> {
        self.units().validate()?;
        for (name, v) in [("omega", self.omega), ("k", self.k), ("m", self.m)] {
            if !v.is_finite() {
                return Err(Error::InvalidParams(format!("{name} must be finite, got {v}")));
            }
        }
        if self.m < 0.0 {
            return Err(Error::InvalidParams(format!("m must be non-negative, got {}", self.m)));
        }
        if self.amplitude.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::InvalidParams("amplitude must be finite".into()));
        }
        Ok(())
    }

    pub fn units(&self) -> Units {
        Units { c: self.c, hbar: self.hbar }
    }

    /// mc/ħ, the value of the (ω/c) source slot.
    pub fn source_rate(&self) -> f64 {
        self.m * self.c / self.hbar
    }

    pub fn amplitude_norm(&self) -> f64 {
        self.amplitude.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Same wave with a different amplitude.
    pub fn with_amplitude(&self, amplitude: [Complex64; 4]) -> Self {
        Self { amplitude, ..*self }
    }

    /// The complex conjugate wave: (−ω, −k) and conjugated amplitudes.
    pub fn conjugate(&self) -> Self {
        Self { omega: -self.omega, k: -self.k, amplitude: self.amplitude.map(|a| a.conj()), ..*self }
    }

    /// Relative distance from the shell, |ω² − c²k² − (mc²/ħ)²| / (ω² + c²k² + (mc²/ħ)²).
    pub fn shell_defect(&self) -> f64 {
        let rest = self.m * self.c * self.c / self.hbar;
        let ck = self.c * self.k;
        let scale = self.omega * self.omega + ck * ck + rest * rest;
        if scale == 0.0 {
            return 0.0;
        }
        (self.omega * self.omega - ck * ck - rest * rest).abs() / scale
    }
}

/// ε± = ±√(c²p² + m²c⁴).
pub fn dispersion(m: f64, p: f64, c: f64, hbar: f64) -> Result<(f64, f64)> {
    if ![m, p, c, hbar].iter().all(|v| v.is_finite()) {
        return Err(Error::InvalidParams("dispersion inputs must be finite".into()));
    }
    if c <= 0.0 {
        return Err(Error::InvalidParams(format!("c must be positive, got {c}")));
    }
    let e = (c * c * p * p + m * m * c.powi(4)).sqrt();
    Ok((e, -e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dispersion_examples() {
        assert_eq!(dispersion(0.0, 1.0, 1.0, 1.0).unwrap(), (1.0, -1.0));
        assert_eq!(dispersion(3.0, 0.0, 2.0, 1.0).unwrap(), (12.0, -12.0));
        let (p, n) = dispersion(1.0, 1.0, 1.0, 1.0).unwrap();
        assert!((p - 2f64.sqrt()).abs() < 1e-15 && p == -n);
        assert_eq!(dispersion(0.0, 2.0, 1.0, 1.0).unwrap(), (2.0, -2.0));
        assert!(dispersion(f64::NAN, 1.0, 1.0, 1.0).is_err());
        assert!(dispersion(1.0, 1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn params_validation() {
        let z = [Complex64::new(0.0, 0.0); 4];
        assert!(PlaneWaveParams::new(1.0, 1.0, -1.0, Units::default(), z).is_err());
        assert!(PlaneWaveParams::new(1.0, 1.0, 1.0, Units { c: 0.0, hbar: 1.0 }, z).is_err());
        assert!(PlaneWaveParams::new(1.0, 1.0, 1.0, Units { c: 1.0, hbar: -1.0 }, z).is_err());
        assert!(PlaneWaveParams::new(f64::INFINITY, 1.0, 1.0, Units::default(), z).is_err());
        let p = PlaneWaveParams::on_shell(1.0, 1.0, Units::default(), -1.0, z).unwrap();
        assert!((p.omega + 2f64.sqrt()).abs() < 1e-15);
        assert!(p.shell_defect() < 1e-15);
    }
}

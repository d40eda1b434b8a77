use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;

use crate::dirac_algebra::{standard_matrix, working_matrix, MatrixLabel};
use crate::equation_engine::{DiracForm, Side};
use crate::symcore::Axis;

use super::Units;

pub type SymbolMatrix = Matrix4<Complex64>;

/// The Dirac form divided by ħc and applied to `e^{i(kξ − ωt)}`.
///
/// Column forms give `(ω/c)I + s_e·k·α₂ + s_m·(mc/ħ)·β`. Row forms act on
/// the row amplitude `v` from the right; the returned matrix is transposed
/// so the kernel condition reads `K·v = 0` in both cases.
pub fn symbol_matrix(form: DiracForm, axis: Axis, omega: f64, k: f64, m: f64, units: Units) -> SymbolMatrix {
    let alpha0 = standard_matrix(MatrixLabel::ALPHA0).to_complex();
    let alpha2 = standard_matrix(working_matrix(axis)).to_complex();
    let beta = standard_matrix(MatrixLabel::BETA).to_complex();
    let s_e = form.energy_sign.as_i64() as f64;
    let s_m = form.mass_sign.as_i64() as f64;
    let rate = m * units.c / units.hbar;
    let w = omega / units.c;
    let c = |x: f64| Complex64::new(x, 0.0);
    match form.side {
        Side::Column => alpha0 * c(w) + alpha2 * c(s_e * k) + beta * c(s_m * rate),
        // ψ⁺ε̂ → −iħ∂ψ⁺/∂t = −ħω ψ⁺, ψ⁺p̂ → +iħ∂ψ⁺/∂ξ = −ħk ψ⁺
        Side::Row => (alpha0 * c(-w) + alpha2 * c(-s_e * k) + beta * c(s_m * rate)).transpose(),
    }
}

/// Singular values in descending order.
pub fn singular_values(s: &SymbolMatrix) -> [f64; 4] {
    let mut sv: Vec<f64> = s.svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    [sv[0], sv[1], sv[2], sv[3]]
}

/// |det S| / σ_max⁴; zero for the zero matrix.
pub fn relative_determinant(s: &SymbolMatrix) -> f64 {
    let smax = singular_values(s)[0];
    if smax == 0.0 {
        return 0.0;
    }
    s.determinant().norm() / smax.powi(4)
}

/// Right singular vectors whose singular value is below `rel_tol·σ_max`.
pub fn kernel(s: &SymbolMatrix, rel_tol: f64) -> Vec<Vector4<Complex64>> {
    let svd = s.svd(false, true);
    let v_t = svd.v_t.expect("requested");
    let smax = svd.singular_values.max();
    let mut out: Vec<(f64, Vector4<Complex64>)> = (0..4)
        .filter(|&i| svd.singular_values[i] <= rel_tol * smax)
        .map(|i| (svd.singular_values[i], v_t.row(i).adjoint()))
        .collect();
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out.into_iter().map(|(_, v)| v).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn closed_form_det(omega: f64, k: f64, m: f64, u: Units) -> f64 {
        let w = omega / u.c;
        let r = m * u.c / u.hbar;
        (w * w - k * k - r * r).powi(2)
    }

    #[test]
    fn zero_frequency_is_mass_term() {
        let beta = standard_matrix(MatrixLabel::BETA).to_complex();
        for form in DiracForm::NAMED {
            for axis in Axis::ALL {
                let s = symbol_matrix(form, axis, 0.0, 0.0, 1.0, Units::default());
                let expected = beta * Complex64::new(form.mass_sign.as_i64() as f64, 0.0);
                assert_eq!(s, expected);
            }
        }
    }

    #[test]
    fn determinant_matches_closed_form() {
        let u = Units { c: 2.0, hbar: 0.5 };
        for form in DiracForm::NAMED {
            for axis in Axis::ALL {
                for (omega, k, m) in [(1.0, 0.3, 0.2), (-3.0, 1.5, 0.0), (0.5, -2.0, 1.0)] {
                    let d = symbol_matrix(form, axis, omega, k, m, u).determinant();
                    let oracle = closed_form_det(omega, k, m, u);
                    assert!((d.re - oracle).abs() < 1e-12 * oracle.max(1.0) && d.im.abs() < 1e-12, "{form} {axis}");
                }
            }
        }
    }

    #[test]
    fn on_shell_kernel_is_two_dimensional() {
        let u = Units::default();
        let omega = 2f64.sqrt();
        for form in DiracForm::NAMED {
            let s = symbol_matrix(form, Axis::Y, omega, 1.0, 1.0, u);
            assert!(relative_determinant(&s) < 1e-10);
            let ker = kernel(&s, 1e-10);
            assert_eq!(ker.len(), 2);
            for v in ker {
                assert!((s * v).norm() < 1e-12);
            }
            let off = symbol_matrix(form, Axis::Y, 1.1 * omega, 1.0, 1.0, u);
            assert!(relative_determinant(&off) > 1e-4);
            assert!(kernel(&off, 1e-10).is_empty());
        }
    }
}

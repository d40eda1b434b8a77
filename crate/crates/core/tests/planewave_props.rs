use diracem_core::equation_engine::{expand, DiracForm, Slot};
use diracem_core::field_maps::{all_mappings, mapping, Orientation};
use diracem_core::planewave::{
    dispersion, dispersion_suite, kernel, kernel_wave, numeric_bilinear_spotcheck, relative_determinant, residual,
    symbol_matrix, CheckVerdict, PlaneWaveParams, Units,
};
use diracem_core::tolerance::{Tolerances, KERNEL, OFF_SHELL, PERTURBATION, SPOTCHECK};
use diracem_core::Axis;
use num_complex::Complex64;
use proptest::prelude::*;

fn form() -> impl Strategy<Value = DiracForm> {
    (0usize..4).prop_map(|i| DiracForm::NAMED[i])
}

fn axis() -> impl Strategy<Value = Axis> {
    (0usize..3).prop_map(|i| Axis::ALL[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn determinant_equals_squared_shell_function(
        f in form(), a in axis(), omega in -10.0f64..10.0, k in -10.0f64..10.0, m in 0.0f64..10.0,
        c in 0.5f64..3.0, hbar in 0.5f64..3.0,
    ) {
        let u = Units { c, hbar };
        let det = symbol_matrix(f, a, omega, k, m, u).determinant();
        let r = m * c / hbar;
        let w = omega / c;
        let oracle = (w * w - k * k - r * r).powi(2);
        let scale = (w * w + k * k + r * r).powi(2);
        prop_assert!((det.re - oracle).abs() <= 1e-12 * scale.max(1.0));
        prop_assert!(det.im.abs() <= 1e-12 * scale.max(1.0));
    }

    #[test]
    fn shell_roots_and_off_shell_gap(f in form(), a in axis(), k in 0.1f64..=10.0, m in 0.1f64..=10.0, branch in prop_oneof![Just(1.0), Just(-1.0)]) {
        let u = Units::default();
        let omega = branch * (k * k + m * m).sqrt();
        prop_assert!(relative_determinant(&symbol_matrix(f, a, omega, k, m, u)) < KERNEL);
        prop_assert!(relative_determinant(&symbol_matrix(f, a, 1.1 * omega, k, m, u)) > OFF_SHELL);
        prop_assert!(!kernel(&symbol_matrix(f, a, omega, k, m, u), KERNEL).is_empty());
    }

    #[test]
    fn kernel_waves_solve_their_systems(f in form(), idx in 0usize..6, k in 0.1f64..=10.0, m in 0.0f64..=10.0, seed in any::<u64>()) {
        let map = all_mappings()[idx];
        let w = kernel_wave(f, &map, k, m, Units::default(), 1.0, KERNEL).unwrap().unwrap();
        prop_assert!(residual(&expand(f, &map), &w, 100, seed) < KERNEL);
    }

    #[test]
    fn flipped_source_is_detected(f in form(), idx in 0usize..6, k in 0.1f64..=10.0, m in 0.1f64..=10.0) {
        let map = all_mappings()[idx];
        let w = kernel_wave(f, &map, k, m, Units::default(), 1.0, KERNEL).unwrap().unwrap();
        let sys = expand(f, &map);
        let line = (0..4).max_by(|&a, &b| w.amplitude[a].norm().total_cmp(&w.amplitude[b].norm())).unwrap();
        let sym = sys.equations[line].leading();
        let broken = sys.with_coefficient(line, sym, Slot::Source, -sys.equations[line].coefficient(sym, Slot::Source));
        prop_assert!(residual(&broken, &w, 100, 1) > PERTURBATION * w.amplitude_norm());
    }
}

#[test]
fn dispersion_values() {
    let (p, n) = dispersion(1.0, 1.0, 1.0, 1.0).unwrap();
    assert!((p - 2f64.sqrt()).abs() < 1e-15);
    assert_eq!(p, -n);
}

#[test]
fn suite_passes_with_default_seed() {
    let r = dispersion_suite(100, 100, 0, Units::default(), &Tolerances::default()).unwrap();
    assert_eq!(r.verdict, CheckVerdict::Pass, "{r:?}");
    let again = dispersion_suite(100, 100, 0, Units::default(), &Tolerances::default()).unwrap();
    assert_eq!(serde_json::to_string(&r).unwrap(), serde_json::to_string(&again).unwrap());
}

#[test]
fn thousand_spot_checks() {
    let r = numeric_bilinear_spotcheck(1000, 42, &Tolerances::default());
    assert!(r.residuals["max_abs_difference"] < SPOTCHECK);
    assert_eq!(r.verdict, CheckVerdict::Pass);
}

#[test]
fn massless_conjugate_wave() {
    let map = mapping(Axis::Z, Orientation::Counterclockwise);
    let w = kernel_wave(DiracForm::FORM_2_10, &map, 2.0, 0.0, Units::default(), -1.0, KERNEL).unwrap().unwrap();
    assert!(residual(&expand(DiracForm::FORM_2_10, &map), &w, 100, 5) < KERNEL);
    assert!(residual(&expand(DiracForm::FORM_2_11, &map), &w.conjugate(), 100, 5) < KERNEL);
    let zero = PlaneWaveParams { amplitude: [Complex64::new(0.0, 0.0); 4], ..w };
    assert_eq!(residual(&expand(DiracForm::FORM_2_10, &map), &zero, 10, 5), 0.0);
}

use std::collections::BTreeMap;
use std::fmt;

use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use super::symbol::{kernel, relative_determinant, symbol_matrix};
use super::{PlaneWaveParams, Units};
use crate::bilinears::bilinear;
use crate::dirac_algebra::{standard_matrix, MatrixLabel};
use crate::equation_engine::{expand, ComponentSystem, DiracForm, Side, Slot};
use crate::field_maps::{all_mappings, charge_conjugate, BispinorMap, Phase};
use crate::symcore::{Axis, FieldSymbol, Symbol};
use crate::tolerance::Tolerances;
use crate::Result;

/// Half-width of the window the random (t, ξ) points are drawn from.
const SAMPLE_WINDOW: f64 = 10.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckVerdict {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for CheckVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckVerdict::Pass => "pass",
            CheckVerdict::Fail => "fail",
            CheckVerdict::NotApplicable => "not applicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PlaneWaveReport {
    pub check: String,
    pub parameters: serde_json::Value,
    pub residuals: BTreeMap<String, f64>,
    pub verdict: CheckVerdict,
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl PlaneWaveReport {
    pub fn passed(&self) -> bool {
        self.verdict == CheckVerdict::Pass
    }
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn phase_value(p: Phase) -> Complex64 {
    p.to_gaussian().to_complex64()
}

fn side_phases(map: &BispinorMap, side: Side) -> [Complex64; 4] {
    match side {
        Side::Column => map.phases().map(phase_value),
        Side::Row => map.phases().map(|p| phase_value(p.conj())),
    }
}

/// Field amplitudes F_j from a bispinor amplitude, ψ_j = phase_j·F_j.
pub fn field_amplitudes(map: &BispinorMap, side: Side, v: &Vector4<Complex64>) -> [Complex64; 4] {
    let q = side_phases(map, side);
    [v[0] / q[0], v[1] / q[1], v[2] / q[2], v[3] / q[3]]
}

/// The system applied to the plane wave, in field space: row k is
/// equation k, column j the leading symbol of line j.
pub fn system_matrix(system: &ComponentSystem, params: &PlaneWaveParams) -> Matrix4<Complex64> {
    let leading = system.leading_symbols();
    let dt = Complex64::new(0.0, -params.omega / params.c);
    let dx = Complex64::new(0.0, params.k);
    let src = c(params.source_rate());
    Matrix4::from_fn(|row, col| match (system.equations.get(row), leading.get(col)) {
        (Some(eq), Some(&sym)) => {
            eq.coefficient(sym, Slot::Time).to_complex64() * dt
                + eq.coefficient(sym, Slot::Space).to_complex64() * dx
                + eq.coefficient(sym, Slot::Source).to_complex64() * src
        }
        _ => Complex64::new(0.0, 0.0),
    })
}

/// Max |residual| over `samples` random (t, ξ) points.
pub fn residual(system: &ComponentSystem, params: &PlaneWaveParams, samples: usize, seed: u64) -> f64 {
    let a = system_matrix(system, params);
    let f = Vector4::from(params.amplitude);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let t = rng.random_range(-SAMPLE_WINDOW..SAMPLE_WINDOW);
        let xi = rng.random_range(-SAMPLE_WINDOW..SAMPLE_WINDOW);
        let wave = Complex64::from_polar(1.0, params.k * xi - params.omega * t);
        let fields = f * wave;
        // analytic derivatives: ∂_t → −iω, ∂_ξ → ik on each component
        let r = a * fields;
        worst = r.iter().map(|z| z.norm()).fold(worst, f64::max);
    }
    worst
}

/// An on-shell plane wave whose amplitude spans the numeric kernel of the
/// symbol matrix; `None` if no kernel vector is found.
pub fn kernel_wave(
    form: DiracForm,
    map: &BispinorMap,
    k: f64,
    m: f64,
    units: Units,
    branch: f64,
    rel_tol: f64,
) -> Result<Option<PlaneWaveParams>> {
    let zero = [c(0.0); 4];
    let shell = PlaneWaveParams::on_shell(k, m, units, branch, zero)?;
    let s = symbol_matrix(form, map.axis, shell.omega, k, m, units);
    Ok(kernel(&s, rel_tol).first().map(|v| shell.with_amplitude(field_amplitudes(map, form.side, v))))
}

fn params_json(p: &PlaneWaveParams) -> serde_json::Value {
    json!({ "omega": p.omega, "k": p.k, "m": p.m, "c": p.c, "hbar": p.hbar })
}

/// Column solution conjugated into the row form.
pub fn adjoint_duality_check(
    form: DiracForm,
    map: &BispinorMap,
    params: &PlaneWaveParams,
    samples: usize,
    seed: u64,
    tol: &Tolerances,
) -> PlaneWaveReport {
    let (column_form, row_form) = match form.side {
        Side::Column => (form, form.conjugate_side()),
        Side::Row => (form.conjugate_side(), form),
    };
    let column = residual(&expand(column_form, map), params, samples, seed);
    let mut residuals = BTreeMap::from([("column".to_owned(), column)]);
    let mut notes = Vec::new();
    let verdict = if params.shell_defect() > tol.kernel || column > tol.kernel {
        notes.push("column amplitude does not solve the column form; duality not applicable".into());
        CheckVerdict::NotApplicable
    } else {
        let row = residual(&expand(row_form, map), &params.conjugate(), samples, seed);
        residuals.insert("row".into(), row);
        if row < tol.kernel {
            CheckVerdict::Pass
        } else {
            CheckVerdict::Fail
        }
    };
    PlaneWaveReport {
        check: "adjoint_duality".into(),
        parameters: json!({
            "wave": params_json(params),
            "column_form": column_form,
            "row_form": row_form,
            "map": map.tag(),
            "samples": samples,
            "tolerance": tol.kernel,
        }),
        residuals,
        verdict,
        seed: Some(seed),
        notes,
    }
}

/// Flips the source sign on the line whose amplitude is largest and checks
/// the residual rises above the perturbation bound.
pub fn perturbation_check(
    system: &ComponentSystem,
    params: &PlaneWaveParams,
    samples: usize,
    seed: u64,
    tol: &Tolerances,
) -> PlaneWaveReport {
    let baseline = residual(system, params, samples, seed);
    let line = (0..4).max_by(|&a, &b| params.amplitude[a].norm().total_cmp(&params.amplitude[b].norm())).unwrap_or(0);
    let sym = system.equations[line].leading();
    let flipped = -system.equations[line].coefficient(sym, Slot::Source);
    let broken = system.with_coefficient(line, sym, Slot::Source, flipped);
    let perturbed = residual(&broken, params, samples, seed);
    let bound = tol.perturbation * params.amplitude_norm();
    let applicable = params.m > 0.0 && params.amplitude_norm() > 0.0;
    let verdict = match (applicable, perturbed > bound) {
        (false, _) => CheckVerdict::NotApplicable,
        (true, true) => CheckVerdict::Pass,
        (true, false) => CheckVerdict::Fail,
    };
    PlaneWaveReport {
        check: "perturbation".into(),
        parameters: json!({
            "wave": params_json(params),
            "flipped_line": line + 1,
            "symbol": sym,
            "samples": samples,
            "bound": bound,
        }),
        residuals: BTreeMap::from([("baseline".into(), baseline), ("perturbed".into(), perturbed)]),
        verdict,
        seed: Some(seed),
        notes: Vec::new(),
    }
}

/// Random (k, m) draws in [0.1, 10]²: relative determinant on and ten
/// percent off shell, and kernel-wave residuals, for every named form and axis.
pub fn dispersion_suite(
    draws: usize,
    samples: usize,
    seed: u64,
    units: Units,
    tol: &Tolerances,
) -> Result<PlaneWaveReport> {
    units.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let maps = all_mappings();
    let (mut max_on, mut min_off, mut max_res) = (0f64, f64::INFINITY, 0f64);
    let mut missing_kernel = 0usize;
    let mut cases = 0usize;
    for draw in 0..draws {
        let k = rng.random_range(0.1..=10.0);
        let m = rng.random_range(0.1..=10.0);
        let wave_seed = rng.random::<u64>();
        for form in DiracForm::NAMED {
            for axis in Axis::ALL {
                let map = maps.iter().filter(|mp| mp.axis == axis).nth(draw % 2).expect("two orientations per axis");
                for branch in [1.0, -1.0] {
                    cases += 1;
                    let shell = PlaneWaveParams::on_shell(k, m, units, branch, [c(0.0); 4])?;
                    let on = symbol_matrix(form, axis, shell.omega, k, m, units);
                    max_on = max_on.max(relative_determinant(&on));
                    let off = symbol_matrix(form, axis, 1.1 * shell.omega, k, m, units);
                    min_off = min_off.min(relative_determinant(&off));
                    match kernel_wave(form, map, k, m, units, branch, tol.kernel)? {
                        Some(wave) => {
                            let sys = expand(form, map);
                            max_res = max_res.max(residual(&sys, &wave, samples, wave_seed));
                        }
                        None => missing_kernel += 1,
                    }
                }
            }
        }
    }
    let pass = max_on < tol.kernel && min_off > tol.off_shell && max_res < tol.kernel && missing_kernel == 0;
    let mut notes = Vec::new();
    if missing_kernel > 0 {
        notes.push(format!("{missing_kernel} on-shell cases without a kernel vector"));
    }
    Ok(PlaneWaveReport {
        check: "dispersion".into(),
        parameters: json!({
            "draws": draws,
            "cases": cases,
            "samples": samples,
            "range": [0.1, 10.0],
            "c": units.c,
            "hbar": units.hbar,
            "on_shell_tolerance": tol.kernel,
            "off_shell_bound": tol.off_shell,
        }),
        residuals: BTreeMap::from([
            ("max_relative_det_on_shell".into(), max_on),
            ("min_relative_det_off_shell".into(), min_off),
            ("max_kernel_residual".into(), max_res),
        ]),
        verdict: if pass { CheckVerdict::Pass } else { CheckVerdict::Fail },
        seed: Some(seed),
        notes,
    })
}

fn spot_maps() -> Vec<BispinorMap> {
    let base = all_mappings();
    base.iter().copied().chain(base.iter().map(charge_conjugate)).collect()
}

fn spot_labels() -> Vec<MatrixLabel> {
    (0..=5).map(|i| MatrixLabel::new(i, None).expect("untagged indices are valid")).collect()
}

/// ψ⁺Mψ by direct complex arithmetic.
pub fn direct_bilinear(map: &BispinorMap, m: &Matrix4<Complex64>, fields: &[f64; 6]) -> Complex64 {
    let psi = Vector4::from_fn(|r, _| phase_value(map.entries[r].phase) * c(fields[map.entries[r].field.index()]));
    (psi.adjoint() * m * psi)[(0, 0)]
}

/// Symbolic bilinears evaluated at random real fields against direct
/// matrix-vector products.
pub fn numeric_bilinear_spotcheck(trials: usize, seed: u64, tol: &Tolerances) -> PlaneWaveReport {
    let cases: Vec<(BispinorMap, MatrixLabel, crate::symcore::Expr, Matrix4<Complex64>)> = spot_maps()
        .into_iter()
        .flat_map(|map| {
            spot_labels().into_iter().map(move |l| (map, l, bilinear(&map, l), standard_matrix(l).to_complex()))
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let fields: [f64; 6] = std::array::from_fn(|_| rng.random_range(-1.0..=1.0));
        let lookup = |s: &Symbol| match s {
            Symbol::Field(f) => c(fields[f.index()]),
            Symbol::Scalar(_) => c(f64::NAN),
        };
        for (map, _, expr, m) in &cases {
            let d = (expr.eval(lookup) - direct_bilinear(map, m, &fields)).norm();
            worst = if d.is_nan() { f64::INFINITY } else { worst.max(d) };
        }
    }
    PlaneWaveReport {
        check: "bilinear_spotcheck".into(),
        parameters: json!({
            "trials": trials,
            "maps": cases.len() / spot_labels().len(),
            "matrices": spot_labels().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "tolerance": tol.spotcheck,
        }),
        residuals: BTreeMap::from([("max_abs_difference".into(), worst)]),
        verdict: if worst < tol.spotcheck { CheckVerdict::Pass } else { CheckVerdict::Fail },
        seed: Some(seed),
        notes: Vec::new(),
    }
}

/// Coefficients of every derived system recovered from the numeric symbol
/// matrix, compared with the symbolic ones for exact equality.
pub fn coefficient_consistency_check() -> PlaneWaveReport {
    let units = Units::default();
    let mut compared = 0usize;
    let mut mismatches = Vec::new();
    for form in DiracForm::NAMED {
        for map in spot_maps() {
            let sys = expand(form, &map);
            let t = symbol_matrix(form, map.axis, 1.0, 0.0, 0.0, units);
            let sp = symbol_matrix(form, map.axis, 0.0, 1.0, 0.0, units);
            let src = symbol_matrix(form, map.axis, 0.0, 0.0, 1.0, units);
            let q = side_phases(&map, form.side);
            let symbols: [FieldSymbol; 4] = map.symbols();
            let i = Complex64::new(0.0, 1.0);
            for (kk, eq) in sys.equations.iter().enumerate() {
                // residual Σ_j [c_t(−iω/c) + c_s(ik) + c_src·mc/ħ]F_j against (S·ψ)_k
                let norm = i * t[(kk, kk)] * q[kk];
                for (j, &sym) in symbols.iter().enumerate() {
                    let numeric = [
                        (Slot::Time, i * t[(kk, j)] * q[j] / norm),
                        (Slot::Space, -i * sp[(kk, j)] * q[j] / norm),
                        (Slot::Source, src[(kk, j)] * q[j] / norm),
                    ];
                    for (slot, value) in numeric {
                        compared += 1;
                        let symbolic = eq.coefficient(sym, slot).to_complex64();
                        if symbolic != value {
                            mismatches.push(format!(
                                "{form} {} line {} {sym} {slot}: {symbolic} vs {value}",
                                map.tag(),
                                kk + 1
                            ));
                        }
                    }
                }
                if eq.symbols().any(|s| !symbols.contains(&s)) {
                    mismatches.push(format!("{form} {} line {}: symbol outside the map", map.tag(), kk + 1));
                }
            }
        }
    }
    PlaneWaveReport {
        check: "coefficient_consistency".into(),
        parameters: json!({ "forms": DiracForm::NAMED.len(), "maps": spot_maps().len(), "coefficients": compared }),
        residuals: BTreeMap::from([("mismatches".into(), mismatches.len() as f64)]),
        verdict: if mismatches.is_empty() { CheckVerdict::Pass } else { CheckVerdict::Fail },
        seed: None,
        notes: mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_maps::{mapping, Orientation};

    #[test]
    fn zero_amplitude_has_zero_residual() {
        let sys = expand(DiracForm::FORM_2_10, &mapping(Axis::X, Orientation::Clockwise));
        let p = PlaneWaveParams::new(0.7, 0.3, 1.0, Units::default(), [c(0.0); 4]).unwrap();
        assert_eq!(residual(&sys, &p, 50, 1), 0.0);
    }

    #[test]
    fn example_fields_give_two() {
        let map = mapping(Axis::Y, Orientation::Counterclockwise);
        let fields = [1.0, 0.0, 0.0, 0.0, 0.0, 1.0];
        let label: MatrixLabel = "alpha2_y".parse().unwrap();
        let direct = direct_bilinear(&map, &standard_matrix(label).to_complex(), &fields);
        let symbolic = bilinear(&map, label).eval(|s| match s {
            Symbol::Field(f) => c(fields[f.index()]),
            Symbol::Scalar(_) => c(f64::NAN),
        });
        assert_eq!(direct, c(2.0));
        assert_eq!(symbolic, c(2.0));
        assert_eq!(direct_bilinear(&map, &standard_matrix(label).to_complex(), &[0.0; 6]), c(0.0));
    }

    #[test]
    fn kernel_wave_solves_system() {
        for form in DiracForm::NAMED {
            for map in all_mappings() {
                let w = kernel_wave(form, &map, 1.0, 1.0, Units::default(), 1.0, 1e-10).unwrap().unwrap();
                assert!(residual(&expand(form, &map), &w, 100, 3) < 1e-10, "{form} {}", map.tag());
            }
        }
    }

    #[test]
    fn duality_examples() {
        let tol = Tolerances::default();
        let map = mapping(Axis::Y, Orientation::Counterclockwise);
        for m in [0.0, 1.0] {
            let w = kernel_wave(DiracForm::FORM_2_4, &map, 1.0, m, Units::default(), 1.0, 1e-10).unwrap().unwrap();
            let r = adjoint_duality_check(DiracForm::FORM_2_4, &map, &w, 100, 9, &tol);
            assert_eq!(r.verdict, CheckVerdict::Pass, "{r:?}");
            assert_eq!(r.residuals.len(), 2);
        }
        let w = kernel_wave(DiracForm::FORM_2_4, &map, 1.0, 1.0, Units::default(), 1.0, 1e-10).unwrap().unwrap();
        let off = PlaneWaveParams { omega: 1.1 * w.omega, ..w };
        let r = adjoint_duality_check(DiracForm::FORM_2_4, &map, &off, 100, 9, &tol);
        assert_eq!(r.verdict, CheckVerdict::NotApplicable);
    }

    #[test]
    fn perturbation_is_detected() {
        let map = mapping(Axis::X, Orientation::Clockwise);
        let w = kernel_wave(DiracForm::FORM_2_10, &map, 1.0, 1.0, Units::default(), 1.0, 1e-10).unwrap().unwrap();
        let r = perturbation_check(&expand(DiracForm::FORM_2_10, &map), &w, 100, 4, &Tolerances::default());
        assert_eq!(r.verdict, CheckVerdict::Pass, "{r:?}");
    }

    #[test]
    fn spotcheck_and_consistency() {
        assert!(numeric_bilinear_spotcheck(50, 7, &Tolerances::default()).passed());
        let r = coefficient_consistency_check();
        assert!(r.passed(), "{:?}", r.notes);
    }
}

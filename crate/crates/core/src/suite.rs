//! Every check of every module, aggregated into one report.

use std::fmt;

use serde::Serialize;

use crate::bilinears::poynting_table;
use crate::dirac_algebra::{
    basis_from_generators, standard_matrix, standard_set, verify_clifford_named, Matrix4, MatrixLabel,
    STANDARD_SET_NAMES,
};
use crate::equation_engine::{
    charge_conjugation_claim_check, compare_paper, invariants, DeviationLedger, DiracForm, Verdict, SYSTEM_IDS,
};
use crate::field_maps::{all_mappings, charge_conjugate, generated_mapping, mapping, transpose_indices, Orientation};
use crate::planewave::{
    adjoint_duality_check, coefficient_consistency_check, dispersion_suite, kernel_wave, numeric_bilinear_spotcheck,
    perturbation_check, PlaneWaveReport, Units,
};
use crate::symcore::Axis;
use crate::tolerance::Tolerances;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    /// A listed deviation between a printed line and its derivation.
    KnownDeviation,
    /// A printed line differing from its derivation and not in the ledger.
    Discrepancy,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::KnownDeviation => "known deviation",
            Status::Discrepancy => "DISCREPANCY",
            Status::Fail => "FAIL",
        })
    }
}

impl From<Verdict> for Status {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Agrees => Status::Pass,
            Verdict::KnownDeviation => Status::KnownDeviation,
            Verdict::Discrepancy => Status::Discrepancy,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl CheckResult {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self { name: name.into(), status: if pass { Status::Pass } else { Status::Fail }, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Section {
    pub name: &'static str,
    pub checks: Vec<CheckResult>,
}

impl Section {
    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub tolerances: Tolerances,
    pub units: Units,
    /// Replaces {α̂₁, α̂₂, α̂₃, β̂} in the algebra and basis sections.
    pub matrix_set: Option<[Matrix4; 4]>,
    pub ledger: DeviationLedger,
    pub draws: usize,
    pub samples: usize,
    pub trials: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            tolerances: Tolerances::default(),
            units: Units::default(),
            matrix_set: None,
            ledger: DeviationLedger::shipped(),
            draws: 100,
            samples: 100,
            trials: 1000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub sections: Vec<Section>,
    pub ledger: DeviationLedger,
    pub planewave: Vec<PlaneWaveReport>,
}

impl SuiteReport {
    pub fn checks(&self) -> impl Iterator<Item = (&'static str, &CheckResult)> {
        self.sections.iter().flat_map(|s| s.checks.iter().map(move |c| (s.name, c)))
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks().filter(|(_, c)| c.status == status).count()
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    /// 0 when everything passes, 1 on any failure, otherwise 3 for unlisted
    /// discrepancies.
    pub fn exit_code(&self) -> u8 {
        if self.count(Status::Fail) > 0 {
            1
        } else if self.count(Status::Discrepancy) > 0 {
            3
        } else {
            0
        }
    }
}

pub fn algebra_section(set: &[Matrix4; 4]) -> Section {
    let report = verify_clifford_named(set, &STANDARD_SET_NAMES);
    let mut checks: Vec<CheckResult> = report
        .anticommutation
        .iter()
        .map(|c| CheckResult::new(format!("{{{}, {}}} = {}", c.first, c.second, c.expected), c.pass, ""))
        .collect();
    checks.extend(report.hermiticity.iter().map(|h| CheckResult::new(format!("{} hermitian", h.matrix), h.pass, "")));
    let alpha0 = standard_matrix(MatrixLabel::ALPHA0);
    checks.push(CheckResult::new("alpha0 hermitian", alpha0.is_hermitian() && alpha0 == Matrix4::identity(), ""));
    Section { name: "algebra", checks }
}

pub fn basis_section(set: &[Matrix4; 4]) -> Section {
    let labels =
        [MatrixLabel::new(1, None), MatrixLabel::new(2, None), MatrixLabel::new(3, None), Ok(MatrixLabel::BETA)]
            .map(|l| l.expect("valid labels"));
    let check = match basis_from_generators(set, &labels) {
        Ok(b) => CheckResult::new(
            "rank 16",
            b.rank == 16 && b.elements.len() == 16,
            format!("{} elements", b.elements.len()),
        ),
        Err(e) => CheckResult::new("rank 16", false, e.to_string()),
    };
    Section { name: "basis", checks: vec![check] }
}

pub fn maps_section() -> Section {
    let mut checks = Vec::new();
    for m in all_mappings() {
        let tag = m.tag();
        checks.push(CheckResult::new(
            format!("{tag} follows the cyclic rule"),
            m == generated_mapping(m.axis, m.orientation),
            "",
        ));
        checks.push(CheckResult::new(
            format!("{tag} charge conjugation involutive"),
            charge_conjugate(&charge_conjugate(&m)) == m,
            "",
        ));
        let orbit = transpose_indices(
            &transpose_indices(&transpose_indices(&m, Orientation::Clockwise), Orientation::Clockwise),
            Orientation::Clockwise,
        );
        checks.push(CheckResult::new(format!("{tag} threefold transposition returns"), orbit == m, ""));
        let stays = all_mappings().contains(&transpose_indices(&m, Orientation::Clockwise));
        checks.push(CheckResult::new(format!("{tag} transposition stays in the table"), stays, ""));
    }
    Section { name: "maps", checks }
}

pub fn poynting_section() -> Section {
    let table = poynting_table();
    let checks = table
        .rows
        .iter()
        .map(|row| {
            let expected = crate::bilinears::PoyntingTable::expected_verdict(row);
            CheckResult::new(
                format!("{}/{} {}", row.axis, row.orientation, row.matrix),
                expected == row.verdict,
                if expected == row.verdict {
                    row.verdict.to_string()
                } else {
                    format!("expected {expected}, got {}", row.expr)
                },
            )
        })
        .collect();
    Section { name: "poynting", checks }
}

pub fn systems_section(ledger: &DeviationLedger) -> Section {
    let checks = SYSTEM_IDS
        .iter()
        .map(|id| match compare_paper(id, ledger) {
            Ok(c) => {
                let c_ref = &c.classification;
                let detail = match c_ref.verdict {
                    Verdict::Agrees => "empty diff".to_owned(),
                    _ => format!("{} listed, {} unlisted discrepancies", c_ref.known.len(), c_ref.unlisted.len()),
                };
                CheckResult { name: format!("compare {id}"), status: c_ref.verdict.into(), detail }
            }
            Err(e) => CheckResult::new(format!("compare {id}"), false, e.to_string()),
        })
        .collect();
    Section { name: "systems", checks }
}

pub fn charge_conjugation_section(ledger: &DeviationLedger) -> Section {
    let r = charge_conjugation_claim_check(ledger);
    let detail = format!(
        "claim {}; derived system matches {}",
        if r.holds { "holds" } else { "does not hold" },
        if r.matches.is_empty() { "no transcription".to_owned() } else { r.matches.join(", ") }
    );
    Section {
        name: "charge_conjugation",
        checks: vec![CheckResult {
            name: "form 2.10 with charge-conjugated y map".into(),
            status: r.classification.verdict.into(),
            detail,
        }],
    }
}

pub fn invariants_section() -> Section {
    let mut checks = Vec::new();
    for m in all_mappings() {
        for form in [DiracForm::FORM_2_4, DiracForm::FORM_2_10] {
            checks.push(CheckResult::new(
                format!("{} row/column source flip, {form}/{}", m.tag(), form.conjugate_side()),
                invariants::source_flip_duality(form, &m),
                "",
            ));
        }
        let scope = DiracForm::NAMED.iter().all(|f| invariants::scope_independent(*f, &m));
        checks.push(CheckResult::new(format!("{} only the working matrix contributes", m.tag()), scope, ""));
        let massless = DiracForm::NAMED.iter().all(|f| invariants::massless_reduction(*f, &m));
        checks.push(CheckResult::new(format!("{} massless reduction", m.tag()), massless, ""));
    }
    for axis in [Axis::Y, Axis::X, Axis::Z] {
        let ok = DiracForm::NAMED.iter().all(|f| invariants::orientation_flip(*f, axis));
        checks.push(CheckResult::new(format!("{axis} orientation flip negates space column"), ok, ""));
    }
    Section { name: "invariants", checks }
}

fn planewave_reports(cfg: &SuiteConfig) -> Vec<PlaneWaveReport> {
    let tol = &cfg.tolerances;
    let mut out = Vec::new();
    match dispersion_suite(cfg.draws, cfg.samples, cfg.seed, cfg.units, tol) {
        Ok(r) => out.push(r),
        Err(e) => out.push(PlaneWaveReport {
            check: "dispersion".into(),
            parameters: serde_json::Value::Null,
            residuals: Default::default(),
            verdict: crate::planewave::CheckVerdict::Fail,
            seed: Some(cfg.seed),
            notes: vec![e.to_string()],
        }),
    }
    let map = mapping(Axis::Y, Orientation::Counterclockwise);
    for m in [0.0, 1.0] {
        if let Ok(Some(w)) = kernel_wave(DiracForm::FORM_2_4, &map, 1.0, m, cfg.units, 1.0, tol.kernel) {
            out.push(adjoint_duality_check(DiracForm::FORM_2_4, &map, &w, cfg.samples, cfg.seed, tol));
        }
    }
    let xmap = mapping(Axis::X, Orientation::Clockwise);
    if let Ok(Some(w)) = kernel_wave(DiracForm::FORM_2_10, &xmap, 1.0, 1.0, cfg.units, 1.0, tol.kernel) {
        out.push(perturbation_check(
            &crate::equation_engine::expand(DiracForm::FORM_2_10, &xmap),
            &w,
            cfg.samples,
            cfg.seed,
            tol,
        ));
    }
    out.push(numeric_bilinear_spotcheck(cfg.trials, cfg.seed, tol));
    out.push(coefficient_consistency_check());
    out
}

/// Reads `[α̂₁, α̂₂, α̂₃, β̂]` as a JSON array of four 4×4 arrays of scalar strings.
pub fn parse_matrix_set(json: &str) -> crate::Result<[Matrix4; 4]> {
    Ok(serde_json::from_str(json)?)
}

pub fn run(cfg: &SuiteConfig) -> SuiteReport {
    let set = cfg.matrix_set.clone().unwrap_or_else(standard_set);
    let planewave = planewave_reports(cfg);
    let pw_checks = planewave
        .iter()
        .map(|r| {
            let detail = r.residuals.iter().map(|(k, v)| format!("{k}={v:.3e}")).collect::<Vec<_>>().join(", ");
            CheckResult::new(r.check.clone(), r.passed(), detail)
        })
        .collect();
    SuiteReport {
        seed: cfg.seed,
        sections: vec![
            algebra_section(&set),
            basis_section(&set),
            maps_section(),
            poynting_section(),
            systems_section(&cfg.ledger),
            charge_conjugation_section(&cfg.ledger),
            invariants_section(),
            Section { name: "planewave", checks: pw_checks },
        ],
        ledger: cfg.ledger.clone(),
        planewave,
    }
}

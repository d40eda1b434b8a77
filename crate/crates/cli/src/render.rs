//! Text layouts for every report.

use std::fmt::Write;

use diracem_core::bilinears::PatternMismatch;
use diracem_core::dirac_algebra::AlgebraBasis;
use diracem_core::equation_engine::{ChargeConjugationReport, PaperComparison, Provenance, Verdict};
use diracem_core::planewave::PlaneWaveReport;
use diracem_core::suite::{Section, Status, SuiteReport};
use diracem_core::{ComponentSystem, PlaneWaveParams, PoyntingTable};

pub struct Output {
    pub code: u8,
    json: serde_json::Value,
    text: String,
    error: Option<String>,
}

impl Output {
    pub fn new(code: u8, json: serde_json::Value, text: String) -> Self {
        Self { code, json, text, error: None }
    }

    pub fn error(code: u8, msg: String) -> Self {
        Self { code, json: serde_json::Value::Null, text: String::new(), error: Some(msg) }
    }

    pub fn emit(&self, json: bool) {
        if let Some(e) = &self.error {
            eprintln!("error: {e}");
            return;
        }
        if json {
            println!("{}", serde_json::to_string_pretty(&self.json).expect("reports serialize"));
        } else {
            print!("{}", self.text);
        }
    }
}

pub fn section(s: &Section) -> String {
    let mut out = String::new();
    for c in &s.checks {
        let _ = write!(out, "{:<6} {}", c.status.to_string(), c.name);
        if !c.detail.is_empty() {
            let _ = write!(out, "  ({})", c.detail);
        }
        out.push('\n');
    }
    let passed = s.count(Status::Pass) + s.count(Status::KnownDeviation);
    let _ = writeln!(out, "{}: {passed}/{} checks passed", s.name, s.checks.len());
    out
}

pub fn basis(b: &AlgebraBasis) -> String {
    let mut out = String::new();
    for (i, e) in b.elements.iter().enumerate() {
        let _ = writeln!(out, "{:>2}  {}", i + 1, e.word_text());
    }
    let _ = writeln!(out, "{} elements, rank {}", b.elements.len(), b.rank);
    out
}

pub fn poynting(t: &PoyntingTable, mismatches: &[PatternMismatch]) -> String {
    let mut out = format!("{:<5} {:<12} {:<9} {:<10} {}\n", "axis", "orientation", "matrix", "verdict", "psi+ M psi");
    for r in &t.rows {
        let _ = writeln!(
            out,
            "{:<5} {:<12} {:<9} {:<10} {}",
            r.axis.to_string(),
            r.orientation.to_string(),
            r.matrix.to_string(),
            r.verdict.to_string(),
            r.expr
        );
    }
    match mismatches.first() {
        None => {
            let _ = writeln!(out, "{} rows, {} non-zero, pattern matches", t.rows.len(), t.nonzero_count());
        }
        Some(m) => {
            let _ = writeln!(out, "pattern mismatch: {m}");
        }
    }
    out
}

pub fn system(s: &ComponentSystem) -> String {
    let mut out = format!("# {}\n", s.provenance);
    if let Provenance::Transcribed { notes, .. } = &s.provenance {
        for n in notes {
            let _ = writeln!(out, "# note: {n}");
        }
    }
    out.push_str(&s.pretty());
    out.push('\n');
    out
}

pub fn comparisons(cs: &[PaperComparison], cc: Option<&ChargeConjugationReport>) -> String {
    let mut out = String::new();
    for c in cs {
        let _ =
            writeln!(out, "{}: {} (form {}, map {} {})", c.id, c.classification.verdict, c.form, c.map.tag(), c.map);
        for d in &c.classification.known {
            let _ = writeln!(
                out,
                "  known    line {}, {} {}: printed {}, derived {}",
                d.equation_index, d.symbol, d.slot, d.expected, d.actual
            );
        }
        for d in &c.classification.unlisted {
            let _ = writeln!(
                out,
                "  UNLISTED line {}, {} {}: printed {}, derived {}",
                d.equation_index, d.symbol, d.slot, d.expected, d.actual
            );
        }
        for l in &c.diff.leading_mismatches {
            let _ = writeln!(
                out,
                "  UNLISTED line {}: leading symbol {:?} vs {:?}",
                l.equation_index, l.expected, l.actual
            );
        }
        for e in &c.classification.stale {
            let _ = writeln!(out, "  stale ledger entry: {}", e.location);
        }
    }
    if let Some(cc) = cc {
        out.push_str(&charge_conjugation(cc));
    }
    out
}

pub fn charge_conjugation(cc: &ChargeConjugationReport) -> String {
    let mut out = format!("charge conjugation: {}\n  claim: {}\n", cc.classification.verdict, cc.claim);
    let _ = writeln!(out, "  map {} {}", cc.map.tag(), cc.map);
    let _ = writeln!(
        out,
        "  claim {}; derived system equals {}",
        if cc.holds { "holds" } else { "does not hold" },
        if cc.matches.is_empty() { "no stored transcription".to_owned() } else { cc.matches.join(", ") }
    );
    for d in &cc.diff.discrepancies {
        let tag = if cc.classification.verdict == Verdict::Discrepancy { "UNLISTED" } else { "known   " };
        let _ = writeln!(
            out,
            "  {tag} line {}, {} {}: printed {}, derived {}",
            d.equation_index, d.symbol, d.slot, d.expected, d.actual
        );
    }
    out
}

pub fn wave(w: &PlaneWaveParams) -> String {
    let amp: Vec<String> = w.amplitude.iter().map(|a| format!("{:.6}{:+.6}i", a.re, a.im)).collect();
    format!(
        "omega = {}, k = {}, m = {}, c = {}, hbar = {}\namplitude = [{}]",
        w.omega,
        w.k,
        w.m,
        w.c,
        w.hbar,
        amp.join(", ")
    )
}

pub fn report(r: &PlaneWaveReport) -> String {
    let mut out = format!("{}: {}\n", r.check, r.verdict);
    for (k, v) in &r.residuals {
        let _ = writeln!(out, "  {k} = {v:.3e}");
    }
    for n in &r.notes {
        let _ = writeln!(out, "  note: {n}");
    }
    out
}

pub fn suite(r: &SuiteReport) -> String {
    let mut out = format!("seed {}\n", r.seed);
    for s in &r.sections {
        let known = s.count(Status::KnownDeviation);
        let _ = write!(out, "{:<20} {:>3}/{:<3} pass", s.name, s.count(Status::Pass) + known, s.checks.len());
        if known > 0 {
            let _ = write!(out, " ({known} known deviation{})", if known == 1 { "" } else { "s" });
        }
        out.push('\n');
        for c in s.checks.iter().filter(|c| c.status != Status::Pass) {
            let _ = writeln!(out, "  {} {}: {}", c.status, c.name, c.detail);
        }
    }
    let _ = writeln!(out, "deviation ledger: {} entries", r.ledger.entries.len());
    for e in &r.ledger.entries {
        let _ = writeln!(
            out,
            "  [{}] {} {} {}: printed {}, derived {}",
            e.check, e.location, e.symbol, e.slot, e.expected, e.actual
        );
    }
    let verdict = match r.exit_code() {
        0 => "all checks pass",
        1 => "FAILED",
        _ => "unlisted discrepancies against the transcriptions",
    };
    let _ = writeln!(out, "{verdict}");
    out
}

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::diff::{diff, Discrepancy, SystemDiff};
use super::expand::{expand, DiracForm};
use super::system::{ComponentSystem, Slot};
use super::transcribed::transcribed_system;
use crate::field_maps::{charge_conjugate, mapping, BispinorMap, Orientation};
use crate::symcore::{Axis, FieldSymbol, GaussianRational};
use crate::{Error, Result};

const SHIPPED_LEDGER: &str = include_str!("../../data/deviations.json");

pub const CHARGE_CONJUGATION_CHECK: &str = "charge-conjugation";

/// A printed coefficient known to differ from its mechanical derivation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerEntry {
    /// System id, or `charge-conjugation`.
    pub check: String,
    pub location: String,
    pub equation_index: usize,
    pub symbol: FieldSymbol,
    pub slot: Slot,
    /// As printed.
    pub expected: GaussianRational,
    /// As derived.
    pub actual: GaussianRational,
    pub note: String,
}

impl LedgerEntry {
    fn matches(&self, d: &Discrepancy) -> bool {
        self.equation_index == d.equation_index
            && self.symbol == d.symbol
            && self.slot == d.slot
            && self.expected == d.expected
            && self.actual == d.actual
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeviationLedger {
    pub version: u32,
    pub entries: Vec<LedgerEntry>,
}

impl DeviationLedger {
    /// The ledger compiled into the crate.
    pub fn shipped() -> Self {
        Self::from_json(SHIPPED_LEDGER).expect("shipped ledger parses")
    }

    pub fn empty() -> Self {
        Self { version: 1, entries: Vec::new() }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn entries_for<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a LedgerEntry> + 'a {
        self.entries.iter().filter(move |e| e.check == check)
    }

    /// Splits a diff into ledger-listed and unlisted discrepancies, plus
    /// ledger entries for `check` that no longer occur.
    pub fn classify(&self, check: &str, d: &SystemDiff) -> Classification {
        let listed: Vec<&LedgerEntry> = self.entries_for(check).collect();
        let (known, unlisted): (Vec<_>, Vec<_>) =
            d.discrepancies.iter().cloned().partition(|x| listed.iter().any(|e| e.matches(x)));
        let stale = listed.into_iter().filter(|e| !d.discrepancies.iter().any(|x| e.matches(x))).cloned().collect();
        let verdict = if !unlisted.is_empty() || !d.leading_mismatches.is_empty() {
            Verdict::Discrepancy
        } else if known.is_empty() {
            Verdict::Agrees
        } else {
            Verdict::KnownDeviation
        };
        Classification { verdict, known, unlisted, stale }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Agrees,
    KnownDeviation,
    Discrepancy,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Agrees => "agrees",
            Verdict::KnownDeviation => "known deviation",
            Verdict::Discrepancy => "discrepancy",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub known: Vec<Discrepancy>,
    pub unlisted: Vec<Discrepancy>,
    pub stale: Vec<LedgerEntry>,
}

/// The form and map whose expansion each printed system is compared with.
pub fn reference_derivation(id: &str) -> Result<(DiracForm, BispinorMap)> {
    use Orientation::*;
    let (form, axis, o) = match id {
        "2.8" => (DiracForm::FORM_2_4, Axis::Y, Counterclockwise),
        "2.9" => (DiracForm::FORM_2_5, Axis::Y, Counterclockwise),
        "2.12" => (DiracForm::FORM_2_10, Axis::Y, Counterclockwise),
        "3.7" => (DiracForm::FORM_2_10, Axis::X, Clockwise),
        "3.8" => (DiracForm::FORM_2_10, Axis::Y, Clockwise),
        "3.9" => (DiracForm::FORM_2_10, Axis::Z, Clockwise),
        _ => return Err(Error::UnknownSystem(id.to_owned())),
    };
    Ok((form, mapping(axis, o)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PaperComparison {
    pub id: String,
    pub form: DiracForm,
    pub map: BispinorMap,
    pub printed: ComponentSystem,
    pub derived: ComponentSystem,
    pub diff: SystemDiff,
    #[serde(flatten)]
    pub classification: Classification,
}

/// Diffs the transcription of `id` (expected) against its derivation (actual).
pub fn compare_paper(id: &str, ledger: &DeviationLedger) -> Result<PaperComparison> {
    let (form, map) = reference_derivation(id)?;
    let printed = transcribed_system(id)?;
    let derived = expand(form, &map);
    let d = diff(&printed, &derived)?;
    let classification = ledger.classify(id, &d);
    Ok(PaperComparison { id: id.to_owned(), form, map, printed, derived, diff: d, classification })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChargeConjugationReport {
    pub claim: String,
    pub form: DiracForm,
    pub map: BispinorMap,
    pub target: String,
    pub diff: SystemDiff,
    /// True iff the derived system equals the target transcription.
    pub holds: bool,
    /// Transcriptions along the same axis that the derived system equals exactly.
    pub matches: Vec<String>,
    #[serde(flatten)]
    pub classification: Classification,
}

/// Form 2.10 with the charge-conjugated y map, compared with transcription 2.9.
pub fn charge_conjugation_claim_check(ledger: &DeviationLedger) -> ChargeConjugationReport {
    let form = DiracForm::FORM_2_10;
    let map = charge_conjugate(&mapping(Axis::Y, Orientation::Counterclockwise));
    let derived = expand(form, &map);
    let target = "2.9";
    let d = diff(&transcribed_system(target).expect("stored id"), &derived).expect("same axis");
    let matches = super::transcribed::SYSTEM_IDS
        .iter()
        .filter_map(|id| {
            let t = transcribed_system(id).ok()?;
            (t.axis == derived.axis && diff(&t, &derived).ok()?.is_empty()).then(|| (*id).to_owned())
        })
        .collect();
    ChargeConjugationReport {
        claim: "form 2.10 with the charge-conjugated y map yields system 2.9 instead of 2.12".into(),
        form,
        holds: d.is_empty(),
        classification: ledger.classify(CHARGE_CONJUGATION_CHECK, &d),
        map,
        target: target.into(),
        diff: d,
        matches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_ledger_loads() {
        let l = DeviationLedger::shipped();
        assert_eq!(l.entries_for("2.8").count(), 4);
        assert_eq!(l.entries_for("2.9").count(), 4);
        assert_eq!(l.entries_for(CHARGE_CONJUGATION_CHECK).count(), 4);
        assert!(l.entries.iter().all(|e| e.slot == Slot::Source));
    }

    #[test]
    fn positive_direction_systems_agree() {
        let l = DeviationLedger::shipped();
        for id in ["2.12", "3.7", "3.8", "3.9"] {
            let c = compare_paper(id, &l).unwrap();
            assert!(c.diff.is_empty(), "{id}: {:?}", c.diff.discrepancies);
            assert_eq!(c.classification.verdict, Verdict::Agrees);
        }
    }

    #[test]
    fn printed_conjugate_pair_is_fully_listed() {
        let l = DeviationLedger::shipped();
        for id in ["2.8", "2.9"] {
            let c = compare_paper(id, &l).unwrap();
            assert_eq!(c.diff.discrepancies.len(), 4, "{id}");
            assert!(c.diff.discrepancies.iter().all(|d| d.slot == Slot::Source));
            assert_eq!(c.classification.verdict, Verdict::KnownDeviation);
            assert!(c.classification.stale.is_empty());
        }
        let c = compare_paper("2.8", &DeviationLedger::empty()).unwrap();
        assert_eq!(c.classification.verdict, Verdict::Discrepancy);
        assert_eq!(c.classification.unlisted.len(), 4);
    }

    #[test]
    fn printed_pair_is_swapped() {
        let l = DeviationLedger::empty();
        let d8 = compare_paper("2.8", &l).unwrap();
        let t9 = transcribed_system("2.9").unwrap();
        assert!(diff(&t9, &d8.derived).unwrap().is_empty());
    }

    #[test]
    fn charge_conjugation_report() {
        let r = charge_conjugation_claim_check(&DeviationLedger::shipped());
        assert!(!r.holds);
        assert_eq!(r.matches, vec!["2.8".to_owned()]);
        assert_eq!(r.diff.lines().len(), 4);
        assert_eq!(r.classification.verdict, Verdict::KnownDeviation);
    }

    #[test]
    fn unknown_id() {
        assert!(compare_paper("4.1", &DeviationLedger::shipped()).is_err());
    }
}

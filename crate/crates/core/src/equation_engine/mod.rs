//! Component expansion of the Dirac forms, printed transcriptions and
//! term-by-term comparison.

mod deviation;
mod diff;
mod expand;
pub mod invariants;
mod system;
mod transcribed;

pub use deviation::{
    charge_conjugation_claim_check, compare_paper, reference_derivation, ChargeConjugationReport, Classification,
    DeviationLedger, LedgerEntry, PaperComparison, Verdict, CHARGE_CONJUGATION_CHECK,
};
pub use diff::{diff, Discrepancy, LeadingMismatch, SystemDiff};
pub use expand::{expand, expand_with, DiracForm, ExpandOptions, MassTerm, MatrixScope, Side};
pub use system::{ComponentEquation, ComponentSystem, Provenance, Slot, SlotCoefficients};
pub use transcribed::{parse_line, transcribed_system, transcription_lines, SYSTEM_IDS};

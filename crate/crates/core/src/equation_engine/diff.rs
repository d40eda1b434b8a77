use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::system::{ComponentEquation, ComponentSystem, Slot};
use crate::symcore::{FieldSymbol, GaussianRational};
use crate::{Error, Result};

/// One coefficient that differs between two systems.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Discrepancy {
    /// 1-based line number.
    pub equation_index: usize,
    pub symbol: FieldSymbol,
    pub slot: Slot,
    pub expected: GaussianRational,
    pub actual: GaussianRational,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, {} {}: expected {}, got {}",
            self.equation_index, self.symbol, self.slot, self.expected, self.actual
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeadingMismatch {
    pub equation_index: usize,
    pub expected: Option<FieldSymbol>,
    pub actual: Option<FieldSymbol>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SystemDiff {
    pub discrepancies: Vec<Discrepancy>,
    pub leading_mismatches: Vec<LeadingMismatch>,
    /// Per line, the λ with actual = λ·expected when one exists.
    pub scalar_multiples: Vec<Option<GaussianRational>>,
}

impl SystemDiff {
    pub fn is_empty(&self) -> bool {
        self.discrepancies.is_empty() && self.leading_mismatches.is_empty()
    }

    /// True when every line matches up to its own overall factor.
    pub fn agrees_up_to_scalars(&self) -> bool {
        self.leading_mismatches.is_empty() && self.scalar_multiples.iter().all(Option::is_some)
    }

    /// Lines (1-based) that carry at least one discrepancy.
    pub fn lines(&self) -> BTreeSet<usize> {
        self.discrepancies.iter().map(|d| d.equation_index).collect()
    }
}

fn scalar_multiple(expected: &ComponentEquation, actual: &ComponentEquation) -> Option<GaussianRational> {
    let symbols: BTreeSet<FieldSymbol> = expected.symbols().chain(actual.symbols()).collect();
    let mut lambda: Option<GaussianRational> = None;
    for &sym in &symbols {
        for slot in Slot::ALL {
            let (e, a) = (expected.coefficient(sym, slot), actual.coefficient(sym, slot));
            match (&lambda, e.is_zero()) {
                (_, true) if !a.is_zero() => return None,
                (_, true) => {}
                (None, false) => lambda = Some(&a / &e),
                (Some(l), false) => {
                    if &e * l != a {
                        return None;
                    }
                }
            }
        }
    }
    match lambda {
        Some(l) if l.is_zero() => None,
        Some(l) => Some(l),
        None => Some(GaussianRational::one()),
    }
}

/// Term-by-term comparison; the diff is empty exactly when the systems are equal.
pub fn diff(expected: &ComponentSystem, actual: &ComponentSystem) -> Result<SystemDiff> {
    if expected.axis != actual.axis {
        return Err(Error::AxisMismatch(expected.axis, actual.axis));
    }
    let n = expected.equations.len().max(actual.equations.len());
    let mut out =
        SystemDiff { discrepancies: Vec::new(), leading_mismatches: Vec::new(), scalar_multiples: Vec::new() };
    for idx in 0..n {
        let (e, a) = (expected.equations.get(idx), actual.equations.get(idx));
        let lead = |eq: Option<&ComponentEquation>| eq.map(ComponentEquation::leading);
        if lead(e) != lead(a) {
            out.leading_mismatches.push(LeadingMismatch {
                equation_index: idx + 1,
                expected: lead(e),
                actual: lead(a),
            });
        }
        let empty = ComponentEquation::new(lead(e).or(lead(a)).expect("one side exists"));
        let (e, a) = (e.unwrap_or(&empty), a.unwrap_or(&empty));
        let symbols: BTreeSet<FieldSymbol> = e.symbols().chain(a.symbols()).collect();
        for sym in symbols {
            for slot in Slot::ALL {
                let (ce, ca) = (e.coefficient(sym, slot), a.coefficient(sym, slot));
                if ce != ca {
                    out.discrepancies.push(Discrepancy {
                        equation_index: idx + 1,
                        symbol: sym,
                        slot,
                        expected: ce,
                        actual: ca,
                    });
                }
            }
        }
        out.scalar_multiples.push(scalar_multiple(e, a));
    }
    Ok(out)
}

//! Structural relations between derived systems.

use std::collections::BTreeMap;

use super::expand::{expand, expand_with, DiracForm, ExpandOptions, MassTerm, MatrixScope, Side};
use super::system::{ComponentEquation, ComponentSystem, Slot};
use crate::field_maps::{mapping, BispinorMap, Orientation};
use crate::symcore::{Axis, GaussianRational};

/// The same system with every coefficient in `slot` negated.
pub fn negate_slot(system: &ComponentSystem, slot: Slot) -> ComponentSystem {
    let mut out = system.clone();
    for eq in &mut out.equations {
        let symbols: Vec<_> = eq.symbols().collect();
        for sym in symbols {
            let c = eq.coefficient(sym, slot);
            eq.add(sym, slot, &(-(c.clone() + c)));
        }
    }
    out
}

fn coefficients_equal(a: &ComponentSystem, b: &ComponentSystem) -> bool {
    a.axis == b.axis && a.equations == b.equations
}

/// Row form equals the column form with the source column negated.
pub fn source_flip_duality(column_form: DiracForm, map: &BispinorMap) -> bool {
    let (column, row) = match column_form.side {
        Side::Column => (column_form, column_form.conjugate_side()),
        Side::Row => (column_form.conjugate_side(), column_form),
    };
    coefficients_equal(&expand(row, map), &negate_slot(&expand(column, map), Slot::Source))
}

fn by_leading(s: &ComponentSystem) -> BTreeMap<crate::symcore::FieldSymbol, &ComponentEquation> {
    s.equations.iter().map(|e| (e.leading(), e)).collect()
}

/// Clockwise and counterclockwise expansions on one axis, aligned by leading
/// symbol: time and source columns agree, space columns are negated.
pub fn orientation_flip(form: DiracForm, axis: Axis) -> bool {
    let cw = expand(form, &mapping(axis, Orientation::Clockwise));
    let ccw = expand(form, &mapping(axis, Orientation::Counterclockwise));
    let (a, b) = (by_leading(&cw), by_leading(&ccw));
    if a.keys().ne(b.keys()) {
        return false;
    }
    a.iter().all(|(lead, ea)| {
        let eb = b[lead];
        let symbols: std::collections::BTreeSet<_> = ea.symbols().chain(eb.symbols()).collect();
        symbols.into_iter().all(|s| {
            ea.coefficient(s, Slot::Time) == eb.coefficient(s, Slot::Time)
                && ea.coefficient(s, Slot::Source) == eb.coefficient(s, Slot::Source)
                && ea.coefficient(s, Slot::Space) == -eb.coefficient(s, Slot::Space)
        })
    })
}

/// Expanding with the whole axis set gives the working-matrix result.
pub fn scope_independent(form: DiracForm, map: &BispinorMap) -> bool {
    let full = expand_with(form, map, ExpandOptions { scope: MatrixScope::FullSet, ..Default::default() });
    coefficients_equal(&full, &expand(form, map))
}

/// With m = 0 the source column vanishes and every remaining coefficient is
/// ±1, each line pairing one time derivative with one space derivative.
pub fn massless_reduction(form: DiracForm, map: &BispinorMap) -> bool {
    let s = expand_with(form, map, ExpandOptions { mass: MassTerm::Massless, ..Default::default() });
    let unit = |c: &GaussianRational| c.is_real() && (c.is_one() || (-c.clone()).is_one());
    s.equations.iter().all(|eq| {
        let mut time = 0;
        let mut space = 0;
        for (_, c) in eq.terms() {
            if !c.source.is_zero() {
                return false;
            }
            for (v, n) in [(&c.time, &mut time), (&c.space, &mut space)] {
                if !v.is_zero() {
                    if !unit(v) {
                        return false;
                    }
                    *n += 1;
                }
            }
        }
        time == 1 && space == 1
    })
}

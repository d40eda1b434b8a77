//! Literal transcriptions of the printed component systems.
//!
//! Each line is written in a small notation that mirrors the printed
//! layout: `dt F` is (1/c)∂F/∂t, `dx F` / `dy F` / `dz F` the spatial
//! derivative, `w F` the (ω/c)F source term, with an optional coefficient
//! (`i`, `-i`, `2`, …) in front. Terms on the right of `=` are moved to
//! the left when parsed.

use super::system::{ComponentEquation, ComponentSystem, Provenance, Slot};
use crate::symcore::{Axis, FieldSymbol, GaussianRational};
use crate::{Error, Result};

pub const SYSTEM_IDS: [&str; 6] = ["2.8", "2.9", "2.12", "3.7", "3.8", "3.9"];

struct Transcription {
    id: &'static str,
    axis: Axis,
    lines: [&'static str; 4],
    notes: &'static [&'static str],
}

const UNSUBSCRIPTED_H: &str =
    "line 1: the derivative field is printed without a subscript; transcribed as H_z, matching the otherwise identical system 2.12";

const TRANSCRIPTIONS: [Transcription; 6] = [
    Transcription {
        id: "2.8",
        axis: Axis::Y,
        lines: [
            "dt E_x - dy H_z + i w E_x = 0",
            "dt E_z + dy H_x + i w E_z = 0",
            "dt H_x + dy E_z - i w H_x = 0",
            "dt H_z - dy E_x - i w H_z = 0",
        ],
        notes: &[UNSUBSCRIPTED_H],
    },
    Transcription {
        id: "2.9",
        axis: Axis::Y,
        lines: [
            "dt E_x - dy H_z - i w E_x = 0",
            "dt E_z + dy H_x - i w E_z = 0",
            "dt H_x + dy E_z + i w H_x = 0",
            "dt H_z - dy E_x + i w H_z = 0",
        ],
        notes: &[UNSUBSCRIPTED_H],
    },
    Transcription {
        id: "2.12",
        axis: Axis::Y,
        lines: [
            "dt E_x + dy H_z + i w E_x = 0",
            "dt E_z - dy H_x + i w E_z = 0",
            "dt H_x - dy E_z - i w H_x = 0",
            "dt H_z + dy E_x - i w H_z = 0",
        ],
        notes: &["line 1: the derivative field is printed without a subscript; transcribed as H_z"],
    },
    Transcription {
        id: "3.7",
        axis: Axis::X,
        lines: [
            "dt E_y + dx H_z = -i w E_y",
            "dt E_z - dx H_y = -i w E_z",
            "dt H_y - dx E_z = i w H_y",
            "dt H_z + dx E_y = i w H_z",
        ],
        notes: &[],
    },
    Transcription {
        id: "3.8",
        axis: Axis::Y,
        lines: [
            "dt E_z + dy H_x = -i w E_z",
            "dt E_x - dy H_z = -i w E_x",
            "dt H_z - dy E_x = i w H_z",
            "dt H_x + dy E_z = i w H_x",
        ],
        notes: &[],
    },
    Transcription {
        id: "3.9",
        axis: Axis::Z,
        lines: [
            "dt E_x + dz H_y = -i w E_x",
            "dt E_y - dz H_x = -i w E_y",
            "dt H_x - dz E_y = i w H_x",
            "dt H_y + dz E_x = i w H_y",
        ],
        notes: &[],
    },
];

/// The stored transcription of system `id`.
pub fn transcribed_system(id: &str) -> Result<ComponentSystem> {
    let t = TRANSCRIPTIONS.iter().find(|t| t.id == id).ok_or_else(|| Error::UnknownSystem(id.to_owned()))?;
    let equations = t.lines.iter().map(|line| parse_line(line, t.axis)).collect::<Result<Vec<_>>>()?;
    Ok(ComponentSystem {
        axis: t.axis,
        provenance: Provenance::Transcribed {
            id: t.id.to_owned(),
            notes: t.notes.iter().map(|n| (*n).to_owned()).collect(),
        },
        equations,
    })
}

/// The raw transcription lines of system `id`.
pub fn transcription_lines(id: &str) -> Result<[&'static str; 4]> {
    TRANSCRIPTIONS.iter().find(|t| t.id == id).map(|t| t.lines).ok_or_else(|| Error::UnknownSystem(id.to_owned()))
}

fn parse_slot(token: &str, axis: Axis) -> Option<Slot> {
    match token {
        "dt" => Some(Slot::Time),
        "w" => Some(Slot::Source),
        _ => {
            let a: Axis = token.strip_prefix('d')?.parse().ok()?;
            (a == axis).then_some(Slot::Space)
        }
    }
}

/// Parses one line in the transcription notation; the first time-derivative
/// symbol becomes the leading symbol.
pub fn parse_line(line: &str, axis: Axis) -> Result<ComponentEquation> {
    let bad = |why: &str| Error::Parse(format!("{why} in `{line}`"));
    let (lhs, rhs) = line.split_once('=').ok_or_else(|| bad("missing `=`"))?;
    let mut terms: Vec<(GaussianRational, Slot, FieldSymbol)> = Vec::new();
    for (side, side_sign) in [(lhs, 1), (rhs, -1)] {
        let tokens: Vec<&str> = side.split_whitespace().collect();
        if tokens == ["0"] {
            continue;
        }
        let mut idx = 0;
        while idx < tokens.len() {
            let mut sign = side_sign;
            match tokens[idx] {
                "+" => idx += 1,
                "-" => {
                    sign = -sign;
                    idx += 1;
                }
                _ if idx > 0 => return Err(bad("missing operator")),
                _ => {}
            }
            let mut coeff = GaussianRational::one();
            let mut token = *tokens.get(idx).ok_or_else(|| bad("dangling operator"))?;
            if parse_slot(token, axis).is_none() {
                coeff = token.parse().map_err(|_| bad("unknown token"))?;
                idx += 1;
                token = tokens.get(idx).ok_or_else(|| bad("coefficient without term"))?;
            }
            let slot = parse_slot(token, axis).ok_or_else(|| bad("unknown slot"))?;
            let symbol: FieldSymbol = tokens.get(idx + 1).ok_or_else(|| bad("slot without field"))?.parse()?;
            idx += 2;
            terms.push((coeff * GaussianRational::real(sign), slot, symbol));
        }
    }
    let leading = terms
        .iter()
        .find(|(_, slot, _)| *slot == Slot::Time)
        .map(|(_, _, s)| *s)
        .ok_or_else(|| bad("no time derivative"))?;
    let mut eq = ComponentEquation::new(leading);
    for (c, slot, sym) in &terms {
        eq.add(*sym, *slot, c);
    }
    Ok(eq)
}

//! Bispinor ↔ electromagnetic-field mappings.
//!
//! Each stored map assigns the four bispinor entries to transverse field
//! components with a phase from {1, −1, i, −i}. There is one map per
//! propagation axis and orientation. The counterclockwise maps describe
//! propagation towards the negative axis direction, the clockwise maps
//! towards the positive one.
//!
//! The tables are hard-coded and cross-checked against the cyclic rule that
//! generates them: reading the axes around the x → y → z circle (clockwise)
//! or x → z → y (counterclockwise) starting after the propagation axis gives
//! the two transverse axes in entry order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::symcore::{Axis, Expr, FieldKind, FieldSymbol, GaussianRational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "ccw")]
    Counterclockwise,
    #[serde(rename = "cw")]
    Clockwise,
}

impl Orientation {
    pub const ALL: [Orientation; 2] = [Orientation::Counterclockwise, Orientation::Clockwise];

    /// −1 for counterclockwise (negative propagation), +1 for clockwise.
    pub fn propagation_sign(self) -> i64 {
        match self {
            Orientation::Counterclockwise => -1,
            Orientation::Clockwise => 1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Orientation::Counterclockwise => Orientation::Clockwise,
            Orientation::Clockwise => Orientation::Counterclockwise,
        }
    }

    /// One step around the axis circle in this direction.
    pub fn rotate(self, axis: Axis) -> Axis {
        match self {
            Orientation::Clockwise => axis.next(),
            Orientation::Counterclockwise => axis.prev(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Counterclockwise => "ccw",
            Orientation::Clockwise => "cw",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Orientation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ccw" | "counterclockwise" => Ok(Orientation::Counterclockwise),
            "cw" | "clockwise" => Ok(Orientation::Clockwise),
            _ => Err(Error::Parse(format!("unknown orientation `{s}`"))),
        }
    }
}

/// A unit phase: 1, −1, i or −i.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Phase {
    #[serde(rename = "+1")]
    One,
    #[serde(rename = "-1")]
    MinusOne,
    #[serde(rename = "+i")]
    I,
    #[serde(rename = "-i")]
    MinusI,
}

impl Phase {
    pub fn conj(self) -> Self {
        match self {
            Phase::I => Phase::MinusI,
            Phase::MinusI => Phase::I,
            p => p,
        }
    }

    pub fn negated(self) -> Self {
        match self {
            Phase::One => Phase::MinusOne,
            Phase::MinusOne => Phase::One,
            Phase::I => Phase::MinusI,
            Phase::MinusI => Phase::I,
        }
    }

    pub fn is_real(self) -> bool {
        matches!(self, Phase::One | Phase::MinusOne)
    }

    pub fn to_gaussian(self) -> GaussianRational {
        match self {
            Phase::One => GaussianRational::from_ints(1, 0),
            Phase::MinusOne => GaussianRational::from_ints(-1, 0),
            Phase::I => GaussianRational::from_ints(0, 1),
            Phase::MinusI => GaussianRational::from_ints(0, -1),
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Phase::One => "+1",
            Phase::MinusOne => "-1",
            Phase::I => "+i",
            Phase::MinusI => "-i",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BispinorEntry {
    pub phase: Phase,
    #[serde(with = "compact_field")]
    pub field: FieldSymbol,
}

impl BispinorEntry {
    pub fn new(phase: Phase, field: FieldSymbol) -> Self {
        Self { phase, field }
    }

    pub fn expr(&self) -> Expr {
        Expr::symbol(self.field).scale(&self.phase.to_gaussian())
    }
}

impl fmt::Display for BispinorEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.phase {
            Phase::One => "",
            Phase::MinusOne => "-",
            Phase::I => "i",
            Phase::MinusI => "-i",
        };
        write!(f, "{sign}{}", self.field)
    }
}

mod compact_field {
    use super::FieldSymbol;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(f: &FieldSymbol, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&f.compact_name())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<FieldSymbol, D::Error> {
        let s = String::deserialize(d)?;
        FieldSymbol::parse_compact(&s).map_err(serde::de::Error::custom)
    }
}

/// ψ written in terms of field components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BispinorMap {
    pub axis: Axis,
    pub orientation: Orientation,
    #[serde(default)]
    pub charge_conjugated: bool,
    pub entries: [BispinorEntry; 4],
}

impl BispinorMap {
    /// Validates the phase pattern (±1, ±1, ±i, ±i) with E above H,
    /// distinct symbols and transversality to `axis`.
    pub fn new(axis: Axis, orientation: Orientation, entries: [BispinorEntry; 4]) -> Result<Self> {
        let map = Self { axis, orientation, charge_conjugated: false, entries };
        map.validate()?;
        Ok(map)
    }

    pub fn validate(&self) -> Result<()> {
        for (idx, e) in self.entries.iter().enumerate() {
            let (kind, real) = if idx < 2 { (FieldKind::E, true) } else { (FieldKind::H, false) };
            if e.field.kind != kind || e.phase.is_real() != real {
                return Err(Error::InvalidMap(format!("entry {} is `{e}`", idx + 1)));
            }
            if e.field.axis == self.axis {
                return Err(Error::InvalidMap(format!("{} lies along the propagation axis", e.field)));
            }
        }
        for a in 0..4 {
            for b in a + 1..4 {
                if self.entries[a].field == self.entries[b].field {
                    return Err(Error::InvalidMap(format!("{} appears twice", self.entries[a].field)));
                }
            }
        }
        Ok(())
    }

    pub fn symbols(&self) -> [FieldSymbol; 4] {
        self.entries.map(|e| e.field)
    }

    pub fn phases(&self) -> [Phase; 4] {
        self.entries.map(|e| e.phase)
    }

    /// ψ as a column of expressions.
    pub fn column(&self) -> [Expr; 4] {
        std::array::from_fn(|i| self.entries[i].expr())
    }

    /// Short human label such as `y/ccw` or `y/ccw+C`.
    pub fn tag(&self) -> String {
        let cc = if self.charge_conjugated { "+C" } else { "" };
        format!("{}/{}{cc}", self.axis, self.orientation)
    }
}

impl fmt::Display for BispinorMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// ψ⁺ as a row: the same symbols with conjugated phases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AdjointMap {
    pub axis: Axis,
    pub orientation: Orientation,
    pub entries: [BispinorEntry; 4],
}

impl AdjointMap {
    pub fn row(&self) -> [Expr; 4] {
        std::array::from_fn(|i| self.entries[i].expr())
    }

    pub fn phases(&self) -> [Phase; 4] {
        self.entries.map(|e| e.phase)
    }
}

impl fmt::Display for AdjointMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(" "))
    }
}

fn table_entry(axis: Axis, orientation: Orientation) -> [(Phase, FieldSymbol); 4] {
    use Axis::{X, Y, Z};
    use Orientation::{Clockwise as Cw, Counterclockwise as Ccw};
    let (a, b) = match (axis, orientation) {
        (Y, Ccw) => (X, Z),
        (X, Ccw) => (Z, Y),
        (Z, Ccw) => (Y, X),
        (Y, Cw) => (Z, X),
        (X, Cw) => (Y, Z),
        (Z, Cw) => (X, Y),
    };
    [
        (Phase::One, FieldSymbol::e(a)),
        (Phase::One, FieldSymbol::e(b)),
        (Phase::I, FieldSymbol::h(a)),
        (Phase::I, FieldSymbol::h(b)),
    ]
}

/// The stored map for `axis` and `orientation`.
pub fn mapping(axis: Axis, orientation: Orientation) -> BispinorMap {
    let entries = table_entry(axis, orientation).map(|(p, f)| BispinorEntry::new(p, f));
    BispinorMap::new(axis, orientation, entries).expect("stored tables are valid")
}

/// The map produced by the cyclic reading rule rather than the table.
pub fn generated_mapping(axis: Axis, orientation: Orientation) -> BispinorMap {
    let a = orientation.rotate(axis);
    let b = orientation.rotate(a);
    let entries = [
        BispinorEntry::new(Phase::One, FieldSymbol::e(a)),
        BispinorEntry::new(Phase::One, FieldSymbol::e(b)),
        BispinorEntry::new(Phase::I, FieldSymbol::h(a)),
        BispinorEntry::new(Phase::I, FieldSymbol::h(b)),
    ];
    BispinorMap::new(axis, orientation, entries).expect("generated maps are valid")
}

/// All six stored maps: counterclockwise y, x, z then clockwise y, x, z.
pub fn all_mappings() -> [BispinorMap; 6] {
    let order = [Axis::Y, Axis::X, Axis::Z];
    let mut out = Vec::with_capacity(6);
    for orientation in Orientation::ALL {
        out.extend(order.iter().map(|&a| mapping(a, orientation)));
    }
    out.try_into().expect("six maps")
}

pub fn adjoint(m: &BispinorMap) -> AdjointMap {
    AdjointMap {
        axis: m.axis,
        orientation: m.orientation,
        entries: m.entries.map(|e| BispinorEntry::new(e.phase.conj(), e.field)),
    }
}

/// Flips the phase of entries 2 and 4.
pub fn charge_conjugate(m: &BispinorMap) -> BispinorMap {
    let mut out = *m;
    for idx in [1, 3] {
        out.entries[idx].phase = out.entries[idx].phase.negated();
    }
    out.charge_conjugated = !m.charge_conjugated;
    out
}

/// Relabels every axis index one step around the circle: x → y → z → x
/// for clockwise, the inverse for counterclockwise. The orientation of the
/// map is unchanged.
pub fn transpose_indices(m: &BispinorMap, direction: Orientation) -> BispinorMap {
    let step = |a: Axis| match direction {
        Orientation::Clockwise => a.next(),
        Orientation::Counterclockwise => a.prev(),
    };
    let mut out = *m;
    out.axis = step(m.axis);
    for e in &mut out.entries {
        e.field = e.field.with_axis(step(e.field.axis));
    }
    out
}

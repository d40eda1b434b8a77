use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Cartesian axis. Ordered x < y < z.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    /// x → y → z → x
    pub fn next(self) -> Axis {
        match self {
            Axis::X => Axis::Y,
            Axis::Y => Axis::Z,
            Axis::Z => Axis::X,
        }
    }

    /// x → z → y → x
    pub fn prev(self) -> Axis {
        match self {
            Axis::X => Axis::Z,
            Axis::Y => Axis::X,
            Axis::Z => Axis::Y,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Axis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" | "X" => Ok(Axis::X),
            "y" | "Y" => Ok(Axis::Y),
            "z" | "Z" => Ok(Axis::Z),
            _ => Err(Error::Parse(format!("unknown axis `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    E,
    H,
}

/// One real electromagnetic field component. Ordered E_x < E_y < E_z < H_x < H_y < H_z.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldSymbol {
    pub kind: FieldKind,
    pub axis: Axis,
}

impl FieldSymbol {
    pub const fn new(kind: FieldKind, axis: Axis) -> Self {
        Self { kind, axis }
    }

    pub const fn e(axis: Axis) -> Self {
        Self::new(FieldKind::E, axis)
    }

    pub const fn h(axis: Axis) -> Self {
        Self::new(FieldKind::H, axis)
    }

    pub fn all() -> [FieldSymbol; 6] {
        [Self::e(Axis::X), Self::e(Axis::Y), Self::e(Axis::Z), Self::h(Axis::X), Self::h(Axis::Y), Self::h(Axis::Z)]
    }

    /// Index into [`FieldSymbol::all`].
    pub fn index(self) -> usize {
        let k = match self.kind {
            FieldKind::E => 0,
            FieldKind::H => 3,
        };
        k + self.axis as usize
    }

    pub fn with_axis(self, axis: Axis) -> Self {
        Self { axis, ..self }
    }

    /// Compact name used by the map JSON, e.g. `Ex`.
    pub fn compact_name(self) -> String {
        format!("{:?}{}", self.kind, self.axis)
    }

    pub fn parse_compact(s: &str) -> Result<Self> {
        let s = s.replace('_', "");
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('E') => FieldKind::E,
            Some('H') => FieldKind::H,
            _ => return Err(Error::Parse(format!("unknown field `{s}`"))),
        };
        let axis: Axis = chars.as_str().parse()?;
        Ok(Self::new(kind, axis))
    }
}

impl fmt::Display for FieldSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}_{}", self.kind, self.axis)
    }
}

impl FromStr for FieldSymbol {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_compact(s)
    }
}

impl Serialize for FieldSymbol {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSymbol {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A commuting real symbol: a field component or a named scalar such as `omega`.
///
/// Field symbols sort before scalars; scalars sort by name.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Field(FieldSymbol),
    Scalar(String),
}

impl Symbol {
    pub fn scalar(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        let mut chars = name.chars();
        let valid_head = chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
        if !valid_head || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') || name == "i" {
            return Err(Error::Parse(format!("invalid scalar symbol `{name}`")));
        }
        if FieldSymbol::parse_compact(&name).is_ok() {
            return Err(Error::Parse(format!("`{name}` is a field symbol name")));
        }
        Ok(Symbol::Scalar(name))
    }
}

impl From<FieldSymbol> for Symbol {
    fn from(f: FieldSymbol) -> Self {
        Symbol::Field(f)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Field(s) => s.fmt(f),
            Symbol::Scalar(name) => f.write_str(name),
        }
    }
}

impl FromStr for Symbol {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        // Field names are written with an underscore in expressions.
        if s.len() == 3 && s.as_bytes()[1] == b'_' {
            if let Ok(f) = FieldSymbol::parse_compact(s) {
                return Ok(Symbol::Field(f));
            }
        }
        Symbol::scalar(s)
    }
}

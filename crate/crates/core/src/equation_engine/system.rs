use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

use super::DiracForm;
use crate::field_maps::BispinorMap;
use crate::symcore::{Axis, FieldSymbol, GaussianRational};
use crate::{Error, Result};

/// Which derivative (or source) a coefficient multiplies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Slot {
    /// (1/c)·∂/∂t
    Time,
    /// ∂/∂ξ along the propagation axis
    Space,
    /// (ω/c), with ω = mc²/ħ
    Source,
}

impl Slot {
    pub const ALL: [Slot; 3] = [Slot::Time, Slot::Space, Slot::Source];

    pub fn as_str(self) -> &'static str {
        match self {
            Slot::Time => "time",
            Slot::Space => "space",
            Slot::Source => "source",
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Slot {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "time" => Ok(Slot::Time),
            "space" => Ok(Slot::Space),
            "source" => Ok(Slot::Source),
            _ => Err(Error::Parse(format!("unknown slot `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct SlotCoefficients {
    #[serde(rename = "c_t")]
    pub time: GaussianRational,
    #[serde(rename = "c_s")]
    pub space: GaussianRational,
    #[serde(rename = "c_src")]
    pub source: GaussianRational,
}

impl SlotCoefficients {
    pub fn get(&self, slot: Slot) -> &GaussianRational {
        match slot {
            Slot::Time => &self.time,
            Slot::Space => &self.space,
            Slot::Source => &self.source,
        }
    }

    pub fn get_mut(&mut self, slot: Slot) -> &mut GaussianRational {
        match slot {
            Slot::Time => &mut self.time,
            Slot::Space => &mut self.space,
            Slot::Source => &mut self.source,
        }
    }

    pub fn is_zero(&self) -> bool {
        Slot::ALL.iter().all(|&s| self.get(s).is_zero())
    }
}

/// One scalar first-order equation `Σ (c_t·(1/c)∂_t + c_s·∂_ξ + c_src·ω/c) F = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComponentEquation {
    leading: FieldSymbol,
    terms: BTreeMap<FieldSymbol, SlotCoefficients>,
}

impl ComponentEquation {
    pub fn new(leading: FieldSymbol) -> Self {
        Self { leading, terms: BTreeMap::new() }
    }

    pub fn leading(&self) -> FieldSymbol {
        self.leading
    }

    pub fn add(&mut self, symbol: FieldSymbol, slot: Slot, c: &GaussianRational) {
        let entry = self.terms.entry(symbol).or_default();
        *entry.get_mut(slot) += c;
        if entry.is_zero() {
            self.terms.remove(&symbol);
        }
    }

    pub fn coefficient(&self, symbol: FieldSymbol, slot: Slot) -> GaussianRational {
        self.terms.get(&symbol).map(|t| t.get(slot).clone()).unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FieldSymbol, &SlotCoefficients)> {
        self.terms.iter()
    }

    pub fn symbols(&self) -> impl Iterator<Item = FieldSymbol> + '_ {
        self.terms.keys().copied()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Self::new(self.leading);
        for (&sym, coeffs) in &self.terms {
            for slot in Slot::ALL {
                out.add(sym, slot, &(coeffs.get(slot) * c));
            }
        }
        out
    }

    /// Rescales so the time coefficient of the leading symbol is 1.
    pub fn normalized(&self) -> Self {
        let t = self.coefficient(self.leading, Slot::Time);
        match t.inv() {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.coefficient(self.leading, Slot::Time).is_one()
    }

    /// Conventional layout with the source terms moved to the right-hand side.
    pub fn pretty(&self, axis: Axis) -> String {
        let mut lhs = Vec::new();
        let mut ordered: Vec<FieldSymbol> = vec![self.leading];
        ordered.extend(self.symbols().filter(|s| *s != self.leading));
        for sym in &ordered {
            let c = self.coefficient(*sym, Slot::Time);
            if !c.is_zero() {
                lhs.push((c, format!("(1/c)∂{sym}/∂t")));
            }
        }
        for sym in &ordered {
            let c = self.coefficient(*sym, Slot::Space);
            if !c.is_zero() {
                lhs.push((c, format!("∂{sym}/∂{axis}")));
            }
        }
        let rhs: Vec<_> = ordered
            .iter()
            .filter_map(|sym| {
                let c = self.coefficient(*sym, Slot::Source);
                (!c.is_zero()).then(|| (-c, format!("(ω/c){sym}")))
            })
            .collect();
        format!("{} = {}", join_terms(&lhs), join_terms(&rhs))
    }
}

fn signed_coefficient(c: &GaussianRational) -> (bool, String) {
    use num_traits::{One, Signed, Zero};
    let (re, im) = (c.re(), c.im());
    if im.is_zero() {
        let mag = re.abs();
        (re.is_negative(), if mag.is_one() { String::new() } else { mag.to_string() })
    } else if re.is_zero() {
        let mag = im.abs();
        (im.is_negative(), if mag.is_one() { "i".into() } else { format!("{mag}i") })
    } else {
        (false, format!("({c})"))
    }
}

fn join_terms(terms: &[(GaussianRational, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (c, body)) in terms.iter().enumerate() {
        let (neg, mag) = signed_coefficient(c);
        match (idx, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&mag);
        out.push_str(body);
    }
    out
}

#[derive(Serialize)]
struct TermRow<'a> {
    symbol: &'a FieldSymbol,
    #[serde(flatten)]
    coefficients: &'a SlotCoefficients,
}

impl Serialize for ComponentEquation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            leading: &'a FieldSymbol,
            terms: Vec<TermRow<'a>>,
        }
        Repr {
            leading: &self.leading,
            terms: self.terms.iter().map(|(symbol, coefficients)| TermRow { symbol, coefficients }).collect(),
        }
        .serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Derived {
        form: DiracForm,
        map: BispinorMap,
    },
    Transcribed {
        id: String,
        #[serde(skip_serializing_if = "Vec::is_empty")]
        notes: Vec<String>,
    },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Derived { form, map } => write!(f, "derived: form {form} with map {} {map}", map.tag()),
            Provenance::Transcribed { id, .. } => write!(f, "transcribed: system {id}"),
        }
    }
}

/// Four component equations for fields depending on t and one coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentSystem {
    pub axis: Axis,
    pub provenance: Provenance,
    pub equations: Vec<ComponentEquation>,
}

impl ComponentSystem {
    pub fn leading_symbols(&self) -> Vec<FieldSymbol> {
        self.equations.iter().map(ComponentEquation::leading).collect()
    }

    pub fn pretty(&self) -> String {
        self.equations.iter().map(|e| e.pretty(self.axis)).collect::<Vec<_>>().join("\n")
    }

    /// Every coefficient in one slot, keyed by (leading symbol, symbol).
    pub fn slot_column(&self, slot: Slot) -> BTreeMap<(FieldSymbol, FieldSymbol), GaussianRational> {
        let mut out = BTreeMap::new();
        for eq in &self.equations {
            for (sym, coeffs) in eq.terms() {
                let c = coeffs.get(slot);
                if !c.is_zero() {
                    out.insert((eq.leading(), *sym), c.clone());
                }
            }
        }
        out
    }

    /// The same system with one coefficient changed; used to build negative
    /// controls.
    pub fn with_coefficient(&self, equation: usize, symbol: FieldSymbol, slot: Slot, value: GaussianRational) -> Self {
        let mut out = self.clone();
        let eq = &mut out.equations[equation];
        let current = eq.coefficient(symbol, slot);
        eq.add(symbol, slot, &(value - current));
        out
    }
}

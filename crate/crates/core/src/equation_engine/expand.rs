use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::system::{ComponentEquation, ComponentSystem, Provenance, Slot};
use crate::dirac_algebra::{matrix_set, standard_matrix, Matrix4, MatrixLabel};
use crate::field_maps::{BispinorMap, Phase};
use crate::symcore::{FieldSymbol, GaussianRational, Sign};
use crate::{Error, Result};

/// Whether the operator acts on the column ψ or, from the right, on the row ψ⁺.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Column,
    Row,
}

/// `(α̂₀ε̂ ± cα̂·p̂ ± β̂mc²)` acting on ψ or ψ⁺, with ε̂ = iħ∂/∂t and
/// p̂ = −iħ∇.
///
/// On the row side the operators act to the left as the hermitian
/// conjugates of their column action: ψ⁺ε̂ means −iħ∂ψ⁺/∂t and ψ⁺p̂
/// means +iħ∇ψ⁺.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DiracForm {
    pub energy_sign: Sign,
    pub mass_sign: Sign,
    pub side: Side,
}

impl DiracForm {
    pub const FORM_2_4: DiracForm = DiracForm { energy_sign: Sign::Plus, mass_sign: Sign::Plus, side: Side::Column };
    pub const FORM_2_5: DiracForm = DiracForm { energy_sign: Sign::Plus, mass_sign: Sign::Plus, side: Side::Row };
    pub const FORM_2_10: DiracForm = DiracForm { energy_sign: Sign::Minus, mass_sign: Sign::Minus, side: Side::Column };
    pub const FORM_2_11: DiracForm = DiracForm { energy_sign: Sign::Minus, mass_sign: Sign::Minus, side: Side::Row };

    /// The four named forms, in id order.
    pub const NAMED: [DiracForm; 4] = [Self::FORM_2_4, Self::FORM_2_5, Self::FORM_2_10, Self::FORM_2_11];

    pub fn from_id(id: &str) -> Result<Self> {
        match id {
            "2.1" | "2.4" => Ok(Self::FORM_2_4),
            "2.5" => Ok(Self::FORM_2_5),
            "2.10" => Ok(Self::FORM_2_10),
            "2.2" | "2.11" => Ok(Self::FORM_2_11),
            _ => Err(Error::UnknownForm(id.to_owned())),
        }
    }

    pub fn id(&self) -> Option<&'static str> {
        match *self {
            Self::FORM_2_4 => Some("2.4"),
            Self::FORM_2_5 => Some("2.5"),
            Self::FORM_2_10 => Some("2.10"),
            Self::FORM_2_11 => Some("2.11"),
            _ => None,
        }
    }

    /// The hermitian-conjugate partner: same signs, other side.
    pub fn conjugate_side(&self) -> Self {
        let side = match self.side {
            Side::Column => Side::Row,
            Side::Row => Side::Column,
        };
        Self { side, ..*self }
    }
}

impl fmt::Display for DiracForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.id() {
            Some(id) => f.write_str(id),
            None => {
                let s = |x: Sign| if x == Sign::Plus { '+' } else { '-' };
                write!(f, "({},{},{:?})", s(self.energy_sign), s(self.mass_sign), self.side)
            }
        }
    }
}

impl FromStr for DiracForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::from_id(s)
    }
}

impl Serialize for DiracForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MassTerm {
    #[default]
    Massive,
    /// m = 0, so ω = 0 and the source column vanishes.
    Massless,
}

/// Which matrices of the axis set are multiplied out.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MatrixScope {
    /// Only the working matrix; the others multiply derivatives along
    /// coordinates ψ does not depend on.
    #[default]
    WorkingOnly,
    /// All three, with the transverse derivatives then set to zero.
    FullSet,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExpandOptions {
    pub mass: MassTerm,
    pub scope: MatrixScope,
}

struct SlotOperator {
    slot: Slot,
    factor: GaussianRational,
    matrix: Matrix4,
    /// `false` for space terms along coordinates the fields do not depend on.
    survives: bool,
}

fn operators(form: &DiracForm, map: &BispinorMap, options: ExpandOptions) -> Vec<SlotOperator> {
    let i = GaussianRational::i();
    let minus_i = -&i;
    // Column: ε̂/(ħc) → i·(1/c)∂_t and c·p̂/(ħc) → −i·∂. Row: the conjugates.
    let (time_factor, space_unit) = match form.side {
        Side::Column => (i.clone(), minus_i.clone()),
        Side::Row => (minus_i.clone(), i.clone()),
    };
    let mut ops = vec![SlotOperator {
        slot: Slot::Time,
        factor: time_factor,
        matrix: standard_matrix(MatrixLabel::ALPHA0),
        survives: true,
    }];
    let working_axis = map.axis;
    for label in matrix_set(map.axis) {
        let tag = label.axis_tag().expect("axis sets are tagged");
        let is_working = tag == working_axis;
        if !is_working && options.scope == MatrixScope::WorkingOnly {
            continue;
        }
        ops.push(SlotOperator {
            slot: Slot::Space,
            factor: &space_unit * &form.energy_sign.to_gaussian(),
            matrix: standard_matrix(label),
            survives: is_working,
        });
    }
    // β̂mc²/(ħc) = β̂·(mc/ħ) = β̂·(ω/c)
    let mass_factor = match options.mass {
        MassTerm::Massive => form.mass_sign.to_gaussian(),
        MassTerm::Massless => GaussianRational::zero(),
    };
    ops.push(SlotOperator {
        slot: Slot::Source,
        factor: mass_factor,
        matrix: standard_matrix(MatrixLabel::BETA),
        survives: true,
    });
    ops
}

/// Substitutes `map` into `form` and returns the normalized four-line system.
pub fn expand(form: DiracForm, map: &BispinorMap) -> ComponentSystem {
    expand_with(form, map, ExpandOptions::default())
}

pub fn expand_with(form: DiracForm, map: &BispinorMap, options: ExpandOptions) -> ComponentSystem {
    let phases: [Phase; 4] = match form.side {
        Side::Column => map.phases(),
        Side::Row => map.phases().map(Phase::conj),
    };
    let symbols: [FieldSymbol; 4] = map.symbols();
    let ops = operators(&form, map, options);

    let equations = (0..4)
        .map(|k| {
            let mut eq = ComponentEquation::new(symbols[k]);
            for op in ops.iter().filter(|op| op.survives) {
                for j in 0..4 {
                    // column: (Mψ)_k = Σ_j M_kj ψ_j;  row: (ψ⁺M)_k = Σ_j ψ⁺_j M_jk
                    let entry = match form.side {
                        Side::Column => op.matrix.get(k, j),
                        Side::Row => op.matrix.get(j, k),
                    };
                    if entry.is_zero() {
                        continue;
                    }
                    let c = &(&op.factor * entry) * &phases[j].to_gaussian();
                    eq.add(symbols[j], op.slot, &c);
                }
            }
            eq.normalized()
        })
        .collect();

    ComponentSystem { axis: map.axis, provenance: Provenance::Derived { form, map: *map }, equations }
}

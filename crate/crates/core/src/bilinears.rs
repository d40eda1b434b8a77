//! Symbolic ψ⁺Mψ for the stored field maps and the resulting Poynting table.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::dirac_algebra::{matrix_set, standard_matrix, Matrix4, MatrixLabel};
use crate::field_maps::{adjoint, all_mappings, BispinorMap, Orientation};
use crate::symcore::{Axis, Expr, FieldSymbol, GaussianRational, Sign};

/// ψ⁺·M·ψ for an arbitrary matrix, expanded and canonical.
pub fn bilinear_with_matrix(map: &BispinorMap, m: &Matrix4) -> Expr {
    let row = adjoint(map).row();
    let col = map.column();
    let mut out = Expr::zero();
    for (r, row_entry) in row.iter().enumerate() {
        for (c, col_entry) in col.iter().enumerate() {
            let coeff = m.get(r, c);
            if coeff.is_zero() {
                continue;
            }
            out = &out + &(row_entry * col_entry).scale(coeff);
        }
    }
    out
}

pub fn bilinear(map: &BispinorMap, label: MatrixLabel) -> Expr {
    bilinear_with_matrix(map, &standard_matrix(label))
}

/// (E×H) along `axis`, right-handed.
pub fn cross_component(axis: Axis) -> Expr {
    let a = axis.next();
    let b = a.next();
    let term = |p: Axis, q: Axis| &Expr::symbol(FieldSymbol::e(p)) * &Expr::symbol(FieldSymbol::h(q));
    &term(a, b) - &term(b, a)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PoyntingClassification {
    Zero,
    CrossComponent { axis: Axis, sign: Sign, magnitude: i64 },
    Unclassified(Expr),
}

impl fmt::Display for PoyntingClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PoyntingClassification::Zero => f.write_str("0"),
            PoyntingClassification::CrossComponent { axis, sign, magnitude } => {
                let s = if *sign == Sign::Minus { "-" } else { "+" };
                write!(f, "{s}{magnitude}[ExH]_{axis}")
            }
            PoyntingClassification::Unclassified(_) => f.write_str("unclassified"),
        }
    }
}

impl Serialize for PoyntingClassification {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Recognizes 0 and ±2·(E×H)_axis; anything else is reported, not rejected.
pub fn classify(e: &Expr) -> PoyntingClassification {
    if e.is_zero() {
        return PoyntingClassification::Zero;
    }
    for axis in Axis::ALL {
        let cross = cross_component(axis);
        for sign in [Sign::Plus, Sign::Minus] {
            if *e == cross.scale(&GaussianRational::real(2 * sign.as_i64())) {
                return PoyntingClassification::CrossComponent { axis, sign, magnitude: 2 };
            }
        }
    }
    PoyntingClassification::Unclassified(e.clone())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoyntingRow {
    pub axis: Axis,
    pub orientation: Orientation,
    pub matrix: MatrixLabel,
    pub verdict: PoyntingClassification,
    #[serde(serialize_with = "serialize_display")]
    pub expr: Expr,
}

fn serialize_display<S: Serializer>(e: &Expr, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(e)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoyntingTable {
    pub rows: Vec<PoyntingRow>,
}

/// A row that breaks the expected pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternMismatch {
    pub row: usize,
    pub axis: Axis,
    pub orientation: Orientation,
    pub matrix: MatrixLabel,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for PatternMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "row {} ({}/{}, {}): expected {}, got {}",
            self.row + 1,
            self.axis,
            self.orientation,
            self.matrix,
            self.expected,
            self.actual
        )
    }
}

impl PoyntingTable {
    /// The verdict every row should carry: zero off the working matrix,
    /// ∓2(E×H) along the propagation axis on it, the sign following the
    /// orientation.
    pub fn expected_verdict(row: &PoyntingRow) -> PoyntingClassification {
        if row.matrix.axis_tag() == Some(row.axis) && row.matrix.index() == 2 {
            let sign = match row.orientation {
                Orientation::Counterclockwise => Sign::Minus,
                Orientation::Clockwise => Sign::Plus,
            };
            PoyntingClassification::CrossComponent { axis: row.axis, sign, magnitude: 2 }
        } else {
            PoyntingClassification::Zero
        }
    }

    pub fn mismatches(&self) -> Vec<PatternMismatch> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(idx, row)| {
                let expected = Self::expected_verdict(row);
                (expected != row.verdict).then(|| PatternMismatch {
                    row: idx,
                    axis: row.axis,
                    orientation: row.orientation,
                    matrix: row.matrix,
                    expected: expected.to_string(),
                    actual: row.expr.to_string(),
                })
            })
            .collect()
    }

    pub fn nonzero_count(&self) -> usize {
        self.rows.iter().filter(|r| r.verdict != PoyntingClassification::Zero).count()
    }
}

/// 6 maps × the 3 matrices of each map's axis set.
pub fn poynting_table() -> PoyntingTable {
    poynting_table_for(&all_mappings())
}

pub fn poynting_table_for(maps: &[BispinorMap]) -> PoyntingTable {
    let rows = maps
        .iter()
        .flat_map(|map| {
            matrix_set(map.axis).into_iter().map(move |label| {
                let expr = bilinear(map, label);
                PoyntingRow {
                    axis: map.axis,
                    orientation: map.orientation,
                    matrix: label,
                    verdict: classify(&expr),
                    expr,
                }
            })
        })
        .collect();
    PoyntingTable { rows }
}

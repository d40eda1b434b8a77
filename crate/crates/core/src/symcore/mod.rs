//! Exact symbolic layer: Gaussian-rational coefficients over commuting real
//! symbols, kept in a canonical form so that equality is map equality.

mod expr;
mod gaussian;
mod symbol;

pub use expr::{Expr, Monomial};
pub use gaussian::GaussianRational;
pub use symbol::{Axis, FieldKind, FieldSymbol, Symbol};

/// A sign attached to a term of an operator or a classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn to_gaussian(self) -> GaussianRational {
        GaussianRational::real(self.as_i64())
    }
}

pub fn expr_add(a: &Expr, b: &Expr) -> Expr {
    a + b
}

pub fn expr_scale(a: &Expr, c: &GaussianRational) -> Expr {
    a.scale(c)
}

pub fn expr_equal(a: &Expr, b: &Expr) -> bool {
    a == b
}

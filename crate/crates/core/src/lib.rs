//! Exact and numeric verification of the Dirac-matrix description of
//! electromagnetic fields.
//!
//! The crate is layered bottom-up:
//!
//! * [`symcore`]: Gaussian-rational scalars and canonical polynomial
//!   expressions over real field symbols.
//! * [`dirac_algebra`]: the standard α/β matrices, anticommutation and
//!   hermiticity checks, the 16-element basis and unitary changes of set.
//! * [`field_maps`]: bispinor ↔ (E, H) mappings for every propagation axis
//!   and orientation, with adjoint, charge conjugation and cyclic index
//!   transposition.
//! * [`bilinears`]: symbolic ψ⁺Mψ and the Poynting table.
//! * [`equation_engine`]: expansion of the Dirac forms into four-line
//!   component systems, reference transcriptions and term-by-term diffs.
//! * [`planewave`]: floating-point dispersion, kernel and residual checks.
//! * [`suite`]: the aggregate run behind `verify-all`.

pub mod bilinears;
pub mod dirac_algebra;
pub mod equation_engine;
mod error;
pub mod field_maps;
pub mod planewave;
pub mod suite;
pub mod symcore;
pub mod tolerance;

pub use error::{Error, Result};

pub use bilinears::{bilinear, classify, poynting_table, PoyntingClassification, PoyntingTable};
pub use dirac_algebra::{
    anticommutator, generate_basis16, matrix_set, standard_matrix, unitary_transform, verify_clifford, AlgebraBasis,
    CliffordReport, Matrix4, MatrixLabel,
};
pub use equation_engine::{
    charge_conjugation_claim_check, diff, expand, transcribed_system, ComponentEquation, ComponentSystem,
    DeviationLedger, DiracForm, Provenance, SystemDiff,
};
pub use field_maps::{
    adjoint, all_mappings, charge_conjugate, mapping, transpose_indices, AdjointMap, BispinorMap, Orientation, Phase,
};
pub use planewave::PlaneWaveParams;
pub use symcore::{Axis, Expr, FieldKind, FieldSymbol, GaussianRational, Monomial, Sign, Symbol};

//! The standard Dirac α/β matrices and the algebraic facts about them:
//! anticommutation, hermiticity, the 16-element basis and invariance under
//! a unitary change of matrix set.

mod matrix;

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use serde::Serialize;

pub use matrix::{exact_rank, Matrix4};

use crate::symcore::{Axis, GaussianRational};
use crate::{Error, Result};

/// Names one of α̂₀, α̂₁, α̂₂, α̂₃, β̂ ≡ α̂₄ or α̂₅, optionally tagged with the
/// coordinate it multiplies. The tag is bookkeeping only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MatrixLabel {
    index: u8,
    axis_tag: Option<Axis>,
}

impl MatrixLabel {
    pub const ALPHA0: MatrixLabel = MatrixLabel { index: 0, axis_tag: None };
    pub const ALPHA1: MatrixLabel = MatrixLabel { index: 1, axis_tag: None };
    pub const ALPHA2: MatrixLabel = MatrixLabel { index: 2, axis_tag: None };
    pub const ALPHA3: MatrixLabel = MatrixLabel { index: 3, axis_tag: None };
    pub const BETA: MatrixLabel = MatrixLabel { index: 4, axis_tag: None };
    pub const ALPHA5: MatrixLabel = MatrixLabel { index: 5, axis_tag: None };

    pub fn new(index: u8, axis_tag: Option<Axis>) -> Result<Self> {
        let ok = match index {
            1..=3 => true,
            0 | 4 | 5 => axis_tag.is_none(),
            _ => false,
        };
        if !ok {
            let tag = axis_tag.map(|a| format!("_{a}")).unwrap_or_default();
            return Err(Error::UnknownLabel(format!("alpha{index}{tag}")));
        }
        Ok(Self { index, axis_tag })
    }

    pub fn tagged(index: u8, axis: Axis) -> Result<Self> {
        Self::new(index, Some(axis))
    }

    pub fn index(self) -> u8 {
        self.index
    }

    pub fn axis_tag(self) -> Option<Axis> {
        self.axis_tag
    }

    pub fn untagged(self) -> Self {
        Self { axis_tag: None, ..self }
    }
}

impl fmt::Display for MatrixLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            4 => f.write_str("beta"),
            n => {
                write!(f, "alpha{n}")?;
                if let Some(a) = self.axis_tag {
                    write!(f, "_{a}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for MatrixLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownLabel(s.to_owned());
        if s == "beta" {
            return Ok(Self::BETA);
        }
        let rest = s.strip_prefix("alpha").ok_or_else(unknown)?;
        let (idx, tag) = match rest.split_once('_') {
            Some((i, t)) => (i, Some(t.parse::<Axis>().map_err(|_| unknown())?)),
            None => (rest, None),
        };
        let index: u8 = idx.parse().map_err(|_| unknown())?;
        Self::new(index, tag).map_err(|_| unknown())
    }
}

impl Serialize for MatrixLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The matrix named by `label`, exactly as in the standard representation.
pub fn standard_matrix(label: MatrixLabel) -> Matrix4 {
    const O: (i64, i64) = (0, 0);
    const P: (i64, i64) = (1, 0);
    const M: (i64, i64) = (-1, 0);
    const I: (i64, i64) = (0, 1);
    const J: (i64, i64) = (0, -1);
    match label.index {
        0 => Matrix4::identity(),
        1 => Matrix4::from_int_pairs([[O, O, O, P], [O, O, P, O], [O, P, O, O], [P, O, O, O]]),
        2 => Matrix4::from_int_pairs([[O, O, O, J], [O, O, I, O], [O, J, O, O], [I, O, O, O]]),
        3 => Matrix4::from_int_pairs([[O, O, P, O], [O, O, O, M], [P, O, O, O], [O, M, O, O]]),
        4 => Matrix4::from_int_pairs([[P, O, O, O], [O, P, O, O], [O, O, M, O], [O, O, O, M]]),
        5 => {
            // −i·α̂₁α̂₂α̂₃
            let product = &(&standard_matrix(MatrixLabel::ALPHA1) * &standard_matrix(MatrixLabel::ALPHA2))
                * &standard_matrix(MatrixLabel::ALPHA3);
            product.scale(&GaussianRational::from_ints(0, -1))
        }
        _ => unreachable!("MatrixLabel::new validates the index"),
    }
}

/// {α̂₁, α̂₂, α̂₃, β̂}
pub fn standard_set() -> [Matrix4; 4] {
    [MatrixLabel::ALPHA1, MatrixLabel::ALPHA2, MatrixLabel::ALPHA3, MatrixLabel::BETA].map(standard_matrix)
}

pub const STANDARD_SET_NAMES: [&str; 4] = ["alpha1", "alpha2", "alpha3", "beta"];

pub fn anticommutator(a: &Matrix4, b: &Matrix4) -> Matrix4 {
    &(a * b) + &(b * a)
}

pub fn commutator(a: &Matrix4, b: &Matrix4) -> Matrix4 {
    &(a * b) - &(b * a)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnticommutationCheck {
    pub first: String,
    pub second: String,
    /// `2I` on the diagonal, `0` off it.
    pub expected: &'static str,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HermiticityCheck {
    pub matrix: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliffordReport {
    pub anticommutation: Vec<AnticommutationCheck>,
    pub hermiticity: Vec<HermiticityCheck>,
    pub pass: bool,
}

impl CliffordReport {
    pub fn failures(&self) -> Vec<String> {
        let pairs = self
            .anticommutation
            .iter()
            .filter(|c| !c.pass)
            .map(|c| format!("{{{}, {}}} ≠ {}", c.first, c.second, c.expected));
        let herm = self.hermiticity.iter().filter(|c| !c.pass).map(|c| format!("{} not hermitian", c.matrix));
        pairs.chain(herm).collect()
    }
}

/// Checks α̂_μα̂_ν + α̂_να̂_μ = 2δ_μν·I for all 10 unordered pairs and
/// hermiticity of each matrix.
pub fn verify_clifford(set: &[Matrix4; 4]) -> CliffordReport {
    verify_clifford_named(set, &["M1", "M2", "M3", "M4"])
}

pub fn verify_clifford_named(set: &[Matrix4; 4], names: &[&str; 4]) -> CliffordReport {
    let two_id = Matrix4::identity().scale(&GaussianRational::real(2));
    let mut anticommutation = Vec::with_capacity(10);
    for mu in 0..4 {
        for nu in mu..4 {
            let ac = anticommutator(&set[mu], &set[nu]);
            let (expected, pass) = if mu == nu { ("2I", ac == two_id) } else { ("0", ac.is_zero()) };
            anticommutation.push(AnticommutationCheck {
                first: names[mu].to_owned(),
                second: names[nu].to_owned(),
                expected,
                pass,
            });
        }
    }
    let hermiticity: Vec<HermiticityCheck> = set
        .iter()
        .zip(names)
        .map(|(m, n)| HermiticityCheck { matrix: (*n).to_owned(), pass: m.is_hermitian() })
        .collect();
    let pass = anticommutation.iter().all(|c| c.pass) && hermiticity.iter().all(|c| c.pass);
    CliffordReport { anticommutation, hermiticity, pass }
}

/// One basis element and the generator word that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisElement {
    pub word: Vec<MatrixLabel>,
    pub matrix: Matrix4,
}

impl BasisElement {
    pub fn word_text(&self) -> String {
        if self.word.is_empty() {
            "I".to_owned()
        } else {
            self.word.iter().map(ToString::to_string).collect::<Vec<_>>().join("*")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraBasis {
    pub elements: Vec<BasisElement>,
    pub rank: usize,
}

/// Multiplies `m` by the unit in {1, i, −1, −i} that moves its first
/// nonzero row-major entry into the sector re > 0, im ≥ 0.
pub fn canonical_phase(m: &Matrix4) -> Matrix4 {
    let Some(first) = m.first_nonzero() else {
        return m.clone();
    };
    let units = [(1, 0), (0, 1), (-1, 0), (0, -1)].map(|(re, im)| GaussianRational::from_ints(re, im));
    let unit = units
        .iter()
        .find(|u| {
            let z = first * *u;
            z.re().is_positive() && !z.im().is_negative()
        })
        .expect("exactly one unit rotates a nonzero entry into the sector");
    m.scale(unit)
}

/// The 16 products of subsets of a generator set, in subset order
/// (identity, singles, pairs, triples, the quadruple).
pub fn basis_from_generators(generators: &[Matrix4; 4], labels: &[MatrixLabel; 4]) -> Result<AlgebraBasis> {
    let mut subsets: Vec<Vec<usize>> =
        (0u32..16).map(|bits| (0..4).filter(|i| bits & (1 << i) != 0).collect()).collect();
    subsets.sort_by_key(|s| (s.len(), s.clone()));
    let elements: Vec<BasisElement> = subsets
        .into_iter()
        .map(|subset| {
            let product = subset.iter().fold(Matrix4::identity(), |acc, &i| &acc * &generators[i]);
            BasisElement { word: subset.iter().map(|&i| labels[i]).collect(), matrix: canonical_phase(&product) }
        })
        .collect();
    let rows: Vec<_> = elements.iter().map(|e| e.matrix.flatten()).collect();
    let rank = exact_rank(&rows);
    if rank != 16 {
        return Err(Error::RankDeficient(rank));
    }
    Ok(AlgebraBasis { elements, rank })
}

pub fn generate_basis16() -> Result<AlgebraBasis> {
    basis_from_generators(
        &standard_set(),
        &[MatrixLabel::ALPHA1, MatrixLabel::ALPHA2, MatrixLabel::ALPHA3, MatrixLabel::BETA],
    )
}

/// u·M·u† for every matrix of the set.
pub fn unitary_transform(set: &[Matrix4; 4], u: &Matrix4) -> Result<[Matrix4; 4]> {
    if !u.is_unitary() {
        return Err(Error::NotUnitary);
    }
    let u_dag = u.adjoint();
    Ok(std::array::from_fn(|i| &(u * &set[i]) * &u_dag))
}

/// The axis-tagged triple used for waves along `axis`. The entry tagged
/// with the propagation axis is always α̂₂, the working matrix.
pub fn matrix_set(axis: Axis) -> [MatrixLabel; 3] {
    let t = |i, a| MatrixLabel::tagged(i, a).expect("indices 1..=3 accept tags");
    match axis {
        Axis::X => [t(2, Axis::X), t(3, Axis::Y), t(1, Axis::Z)],
        Axis::Y => [t(1, Axis::X), t(2, Axis::Y), t(3, Axis::Z)],
        Axis::Z => [t(2, Axis::Z), t(1, Axis::Y), t(3, Axis::X)],
    }
}

/// The member of `matrix_set(axis)` tagged with the propagation axis itself.
pub fn working_matrix(axis: Axis) -> MatrixLabel {
    matrix_set(axis).into_iter().find(|l| l.axis_tag() == Some(axis)).expect("every set tags its own axis")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sm(l: MatrixLabel) -> Matrix4 {
        standard_matrix(l)
    }

    #[test]
    fn alpha2_entries() {
        let a2 = sm(MatrixLabel::ALPHA2);
        let i = GaussianRational::i();
        assert_eq!(*a2.get(0, 3), -&i);
        assert_eq!(*a2.get(1, 2), i);
        assert_eq!(*a2.get(2, 1), -&i);
        assert_eq!(*a2.get(3, 0), i);
        assert_eq!(a2.flatten().iter().filter(|e| !e.is_zero()).count(), 4);
    }

    #[test]
    fn alpha0_is_identity() {
        assert_eq!(sm(MatrixLabel::ALPHA0), Matrix4::identity());
    }

    #[test]
    fn alpha5_is_off_diagonal_block_identity() {
        let o = (0, 0);
        let p = (1, 0);
        let expected = Matrix4::from_int_pairs([[o, o, p, o], [o, o, o, p], [p, o, o, o], [o, p, o, o]]);
        assert_eq!(sm(MatrixLabel::ALPHA5), expected);
    }

    #[test]
    fn axis_tag_does_not_change_matrix() {
        for axis in Axis::ALL {
            for idx in 1..=3 {
                let l = MatrixLabel::tagged(idx, axis).unwrap();
                assert_eq!(sm(l), sm(l.untagged()));
            }
        }
    }

    #[test]
    fn anticommutator_examples() {
        let a1 = sm(MatrixLabel::ALPHA1);
        let a2 = sm(MatrixLabel::ALPHA2);
        let beta = sm(MatrixLabel::BETA);
        assert_eq!(anticommutator(&a1, &a1), Matrix4::identity().scale(&GaussianRational::real(2)));
        assert!(anticommutator(&a1, &a2).is_zero());
        assert!(anticommutator(&a2, &beta).is_zero());
    }

    #[test]
    fn standard_set_passes() {
        let report = verify_clifford_named(&standard_set(), &STANDARD_SET_NAMES);
        assert_eq!(report.anticommutation.len(), 10);
        assert_eq!(report.hermiticity.len(), 4);
        assert!(report.pass, "{:?}", report.failures());
    }

    #[test]
    fn duplicate_fails() {
        let set = [MatrixLabel::ALPHA1, MatrixLabel::ALPHA1, MatrixLabel::ALPHA2, MatrixLabel::ALPHA3].map(sm);
        let report = verify_clifford(&set);
        assert!(!report.pass);
        let failing: Vec<_> = report.anticommutation.iter().filter(|c| !c.pass).collect();
        assert_eq!(failing.len(), 1);
        assert_eq!((failing[0].first.as_str(), failing[0].second.as_str()), ("M1", "M2"));
    }

    #[test]
    fn alpha5_relations() {
        let a5 = sm(MatrixLabel::ALPHA5);
        assert_eq!(&a5 * &a5, Matrix4::identity());
        for l in [MatrixLabel::ALPHA1, MatrixLabel::ALPHA2, MatrixLabel::ALPHA3] {
            assert!(commutator(&a5, &sm(l)).is_zero(), "{l}");
        }
        assert!(anticommutator(&a5, &sm(MatrixLabel::BETA)).is_zero());
        assert!(a5.is_hermitian());
    }

    #[test]
    fn every_standard_matrix_squares_to_identity() {
        for idx in 0..=5 {
            let m = sm(MatrixLabel::new(idx, None).unwrap());
            assert!(m.is_hermitian());
            assert_eq!(&m * &m, Matrix4::identity());
        }
    }

    #[test]
    fn basis16() {
        let basis = generate_basis16().unwrap();
        assert_eq!(basis.elements.len(), 16);
        assert_eq!(basis.rank, 16);
        assert!(basis.elements[0].word.is_empty());
        assert_eq!(basis.elements[0].matrix, Matrix4::identity());
        for e in &basis.elements {
            assert!(e.matrix.first_nonzero().unwrap().is_one(), "{}", e.word_text());
        }
    }

    #[test]
    fn identity_transform_is_noop() {
        let set = standard_set();
        assert_eq!(unitary_transform(&set, &Matrix4::identity()).unwrap(), set);
    }

    #[test]
    fn swap_transform_preserves_relations() {
        let (o, p) = ((0, 0), (1, 0));
        let swap = Matrix4::from_int_pairs([[o, p, o, o], [p, o, o, o], [o, o, p, o], [o, o, o, p]]);
        let set = unitary_transform(&standard_set(), &swap).unwrap();
        assert_ne!(set, standard_set());
        assert!(verify_clifford(&set).pass);
        let labels = [MatrixLabel::ALPHA1, MatrixLabel::ALPHA2, MatrixLabel::ALPHA3, MatrixLabel::BETA];
        assert_eq!(basis_from_generators(&set, &labels).unwrap().rank, 16);
    }

    #[test]
    fn non_unitary_rejected() {
        let twice = Matrix4::identity().scale(&GaussianRational::real(2));
        assert!(matches!(unitary_transform(&standard_set(), &twice), Err(Error::NotUnitary)));
    }

    #[test]
    fn matrix_sets() {
        let names = |a| matrix_set(a).map(|l| l.to_string());
        assert_eq!(names(Axis::Y), ["alpha1_x", "alpha2_y", "alpha3_z"]);
        assert_eq!(names(Axis::X), ["alpha2_x", "alpha3_y", "alpha1_z"]);
        assert_eq!(names(Axis::Z), ["alpha2_z", "alpha1_y", "alpha3_x"]);
        for a in Axis::ALL {
            assert_eq!(working_matrix(a).index(), 2);
            let mut tags: Vec<_> = matrix_set(a).iter().map(|l| l.axis_tag().unwrap()).collect();
            tags.sort();
            assert_eq!(tags, Axis::ALL);
        }
    }

    #[test]
    fn label_parsing() {
        assert_eq!("alpha2_y".parse::<MatrixLabel>().unwrap(), MatrixLabel::tagged(2, Axis::Y).unwrap());
        assert_eq!("beta".parse::<MatrixLabel>().unwrap(), MatrixLabel::BETA);
        assert_eq!("alpha4".parse::<MatrixLabel>().unwrap(), MatrixLabel::BETA);
        for bad in ["alpha6", "alpha0_x", "gamma1", "alpha1_q", "beta_x"] {
            assert!(bad.parse::<MatrixLabel>().is_err(), "{bad}");
        }
    }
}

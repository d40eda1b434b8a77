use diracem_core::dirac_algebra::standard_set;
use diracem_core::{
    anticommutator, generate_basis16, standard_matrix, unitary_transform, verify_clifford, Error, GaussianRational,
    Matrix4, MatrixLabel,
};
use proptest::prelude::*;

fn g(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
    GaussianRational::from_ratios(re, im)
}

fn signed_permutation() -> impl Strategy<Value = Matrix4> {
    (Just([0usize, 1, 2, 3]).prop_shuffle(), prop::array::uniform4(0u8..4)).prop_map(|(perm, phases)| {
        let unit = |p: u8| match p {
            0 => GaussianRational::one(),
            1 => GaussianRational::from_ints(-1, 0),
            2 => GaussianRational::i(),
            _ => GaussianRational::from_ints(0, -1),
        };
        Matrix4::from_fn(|r, c| if perm[r] == c { unit(phases[r]) } else { GaussianRational::zero() })
    })
}

/// Real rotation by a Pythagorean angle, or the (1/2)(1±i) block, in a chosen coordinate plane.
fn plane_block() -> impl Strategy<Value = Matrix4> {
    let blocks = prop_oneof![
        Just([[g((3, 5), (0, 1)), g((-4, 5), (0, 1))], [g((4, 5), (0, 1)), g((3, 5), (0, 1))]]),
        Just([[g((5, 13), (0, 1)), g((12, 13), (0, 1))], [g((-12, 13), (0, 1)), g((5, 13), (0, 1))]]),
        Just([[g((1, 2), (1, 2)), g((1, 2), (-1, 2))], [g((1, 2), (-1, 2)), g((1, 2), (1, 2))]]),
    ];
    (blocks, 0usize..4, 1usize..4).prop_map(|(b, p, off)| {
        let q = (p + off) % 4;
        Matrix4::from_fn(|r, c| {
            let idx = |x: usize| {
                if x == p {
                    Some(0)
                } else if x == q {
                    Some(1)
                } else {
                    None
                }
            };
            match (idx(r), idx(c)) {
                (Some(i), Some(j)) => b[i][j].clone(),
                (None, None) if r == c => GaussianRational::one(),
                _ => GaussianRational::zero(),
            }
        })
    })
}

fn unitary() -> impl Strategy<Value = Matrix4> {
    prop::collection::vec(prop_oneof![signed_permutation(), plane_block()], 1..=4)
        .prop_map(|fs| fs.iter().fold(Matrix4::identity(), |acc, f| &acc * f))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn unitary_changes_preserve_the_algebra(u in unitary()) {
        prop_assert!(u.is_unitary());
        let set = unitary_transform(&standard_set(), &u).unwrap();
        let report = verify_clifford(&set);
        prop_assert!(report.pass, "{:?}", report.failures());
    }

    #[test]
    fn transformed_set_keeps_full_rank(u in unitary()) {
        let set = unitary_transform(&standard_set(), &u).unwrap();
        let labels = [1, 2, 3, 4].map(|i| MatrixLabel::new(i, None).unwrap());
        let basis = diracem_core::dirac_algebra::basis_from_generators(&set, &labels).unwrap();
        prop_assert_eq!(basis.rank, 16);
    }
}

#[test]
fn standard_relations() {
    let set = standard_set();
    let report = verify_clifford(&set);
    assert!(report.pass);
    assert_eq!(report.anticommutation.len(), 10);
    assert_eq!(report.hermiticity.len(), 4);
    let two = Matrix4::identity().scale(&GaussianRational::real(2));
    for (i, a) in set.iter().enumerate() {
        for (j, b) in set.iter().enumerate() {
            let expected = if i == j { two.clone() } else { Matrix4::zero() };
            assert_eq!(anticommutator(a, b), expected);
        }
    }
}

#[test]
fn alpha5_commutes_with_alphas_and_anticommutes_with_beta() {
    let a5 = standard_matrix(MatrixLabel::ALPHA5);
    assert!(a5.is_hermitian());
    assert_eq!(&a5 * &a5, Matrix4::identity());
    let set = standard_set();
    for m in &set[..3] {
        assert!(diracem_core::dirac_algebra::commutator(&a5, m).is_zero());
    }
    assert!(anticommutator(&a5, &set[3]).is_zero());
}

#[test]
fn basis_rank_and_size() {
    let b = generate_basis16().unwrap();
    assert_eq!(b.rank, 16);
    assert_eq!(b.elements.len(), 16);
}

#[test]
fn broken_set_names_the_pair() {
    let mut set = standard_set();
    set[1] = set[0].clone();
    let report = verify_clifford(&set);
    assert!(!report.pass);
    assert!(!report.failures().is_empty());
}

#[test]
fn non_unitary_is_rejected() {
    let u = Matrix4::identity().scale(&GaussianRational::real(2));
    assert!(matches!(unitary_transform(&standard_set(), &u), Err(Error::NotUnitary)));
}

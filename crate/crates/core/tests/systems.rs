use diracem_core::equation_engine::{
    compare_paper, expand_with, invariants, DeviationLedger, ExpandOptions, MassTerm, Slot, Verdict, SYSTEM_IDS,
};
use diracem_core::field_maps::generated_mapping;
use diracem_core::{
    all_mappings, charge_conjugate, diff, expand, mapping, transcribed_system, Axis, DiracForm, FieldSymbol,
    GaussianRational, Orientation,
};

fn g(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_ints(re, im)
}

#[test]
fn clockwise_maps_reproduce_positive_direction_systems() {
    for (id, axis) in [("3.7", Axis::X), ("3.8", Axis::Y), ("3.9", Axis::Z)] {
        let derived = expand(DiracForm::FORM_2_10, &mapping(axis, Orientation::Clockwise));
        let d = diff(&transcribed_system(id).unwrap(), &derived).unwrap();
        assert!(d.is_empty(), "{id}: {:?}", d.discrepancies);
    }
}

#[test]
fn line_examples() {
    let x = expand(DiracForm::FORM_2_10, &mapping(Axis::X, Orientation::Clockwise));
    assert_eq!(x.equations[0].pretty(Axis::X), "(1/c)∂E_y/∂t + ∂H_z/∂x = -i(ω/c)E_y");
    let z = expand(DiracForm::FORM_2_10, &mapping(Axis::Z, Orientation::Clockwise));
    assert_eq!(z.equations[0].pretty(Axis::Z), "(1/c)∂E_x/∂t + ∂H_y/∂z = -i(ω/c)E_x");
}

#[test]
fn massless_expansion_has_no_source() {
    for form in DiracForm::NAMED {
        for map in all_mappings() {
            let s = expand_with(form, &map, ExpandOptions { mass: MassTerm::Massless, ..Default::default() });
            assert!(s.slot_column(Slot::Source).is_empty());
        }
    }
}

#[test]
fn every_equation_is_normalized() {
    for form in DiracForm::NAMED {
        for map in all_mappings().iter().chain(all_mappings().map(|m| charge_conjugate(&m)).iter()) {
            let s = expand(form, map);
            assert!(s.equations.iter().all(|e| e.is_normalized()));
            assert_eq!(s.leading_symbols(), map.symbols().to_vec());
        }
    }
}

#[test]
fn row_column_duality_is_exhaustive() {
    for map in all_mappings() {
        for form in [DiracForm::FORM_2_4, DiracForm::FORM_2_10] {
            assert!(invariants::source_flip_duality(form, &map), "{form} {}", map.tag());
            let col = expand(form, &map);
            let row = expand(form.conjugate_side(), &map);
            assert_eq!(col.slot_column(Slot::Time), row.slot_column(Slot::Time));
            assert_eq!(col.slot_column(Slot::Space), row.slot_column(Slot::Space));
            let flipped: Vec<_> = col.slot_column(Slot::Source).into_values().map(|c| -c).collect();
            assert_eq!(flipped, row.slot_column(Slot::Source).into_values().collect::<Vec<_>>());
        }
    }
}

#[test]
fn orientation_flip_and_scope() {
    for axis in Axis::ALL {
        for form in DiracForm::NAMED {
            assert!(invariants::orientation_flip(form, axis));
        }
    }
    for map in all_mappings() {
        for form in DiracForm::NAMED {
            assert!(invariants::scope_independent(form, &map));
            assert!(invariants::massless_reduction(form, &map));
        }
    }
}

#[test]
fn charge_conjugation_is_involutive_and_keeps_rule() {
    for map in all_mappings() {
        assert_eq!(charge_conjugate(&charge_conjugate(&map)), map);
        assert_ne!(charge_conjugate(&map), map);
        assert_eq!(map, generated_mapping(map.axis, map.orientation));
    }
}

#[test]
fn printed_conjugate_pair_differs_only_in_sources() {
    let ledger = DeviationLedger::shipped();
    for id in SYSTEM_IDS {
        let c = compare_paper(id, &ledger).unwrap();
        assert_ne!(c.classification.verdict, Verdict::Discrepancy, "{id}");
        assert!(c.classification.stale.is_empty(), "{id}");
        for d in &c.diff.discrepancies {
            assert_eq!(d.slot, Slot::Source, "{id}");
            assert_eq!(d.expected, -d.actual.clone());
        }
    }
    let c8 = compare_paper("2.8", &ledger).unwrap();
    let first = &c8.diff.discrepancies[0];
    assert_eq!((first.equation_index, first.symbol), (1, FieldSymbol::e(Axis::X)));
    assert_eq!((first.expected.clone(), first.actual.clone()), (g(0, 1), g(0, -1)));
}

#[test]
fn comparison_is_stable() {
    let ledger = DeviationLedger::shipped();
    for id in SYSTEM_IDS {
        let a = serde_json::to_string(&compare_paper(id, &ledger).unwrap()).unwrap();
        let b = serde_json::to_string(&compare_paper(id, &ledger).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn system_json_shape() {
    let s = transcribed_system("3.7").unwrap();
    let v: serde_json::Value = serde_json::to_value(&s).unwrap();
    assert_eq!(v["axis"], "x");
    assert_eq!(v["provenance"]["transcribed"]["id"], "3.7");
    let first = &v["equations"][0];
    assert_eq!(first["leading"], "E_y");
    let term = &first["terms"][0];
    assert_eq!(term["symbol"], "E_y");
    assert_eq!(term["c_t"], "1");
    assert_eq!(term["c_s"], "0");
    assert_eq!(term["c_src"], "i");
}

use std::collections::{BTreeMap, BTreeSet};

use liebranch_core::branch::{branch_with_cache, peel};
use liebranch_core::embed::{derive_projection_by_weight_matching, projections_equivalent, symplectic_defining_weights};
use liebranch_core::repcore::weyl_dimension;
use liebranch_core::{verify_branching, AlgebraType, Error, RepCache, RootSystem, Weight};
use num_bigint::{BigInt, BigUint};

fn w(s: &str) -> Weight {
    s.parse().unwrap()
}

fn setup() -> (RootSystem, RootSystem) {
    (
        RootSystem::new(AlgebraType::c(28).unwrap()).unwrap(),
        RootSystem::new(AlgebraType::e7()).unwrap(),
    )
}

/// C28 highest weight, then its E7 constituents (all with multiplicity one).
const TABLE: [(&str, &[&str]); 8] = [
    ("1,0^27", &["0^6,1"]),
    ("0,1,0^26", &["0^5,1,0"]),
    ("2,0^27", &["0^6,2", "1,0^6"]),
    ("0,0,1,0^25", &["0^4,1,0^2"]),
    ("3,0^27", &["0^6,3", "1,0^5,1", "0^6,1"]),
    ("1,1,0^26", &["0^5,1,1", "1,0^5,1", "0,1,0^5"]),
    ("0^3,1,0^24", &["0^3,1,0^3"]),
    ("0,2,0^26", &["0^5,2,0", "1,0^5,2", "0,1,0^4,1", "2,0^6", "0^5,1,0"]),
];

#[test]
fn derived_matrix_has_the_right_shape_and_image() {
    let (c28, e7) = setup();
    let a = derive_projection_by_weight_matching(&c28, &e7).unwrap();
    assert_eq!((a.nrows(), a.ncols()), (7, 28));
    a.check_defining_image(&c28, &e7, &Weight::fundamental(7, 7)).unwrap();
    let images: BTreeSet<Weight> = symplectic_defining_weights(28)
        .iter()
        .flat_map(|e| [a.apply(e), a.apply(&-e)])
        .collect();
    assert_eq!(images.len(), 56);
    // the image of the C28 highest weight is the E7 highest weight
    assert_eq!(a.apply(&Weight::fundamental(28, 1)), Weight::fundamental(7, 7));
}

#[test]
fn branching_table() {
    let (c28, e7) = setup();
    let a = derive_projection_by_weight_matching(&c28, &e7).unwrap();
    let mut cache = RepCache::new();
    let mut distinct = BTreeSet::new();
    for (hw, parts) in TABLE {
        let hw = w(hw);
        let d = branch_with_cache(&c28, &e7, &a, &hw, &mut cache).unwrap();
        let want: BTreeMap<Weight, BigUint> = parts.iter().map(|p| (w(p), BigUint::from(1u32))).collect();
        let got: BTreeMap<Weight, BigUint> = d.iter().map(|(k, m)| (k.clone(), m.clone())).collect();
        assert_eq!(got, want, "{}", hw);
        let allow: Vec<Weight> = want.keys().cloned().collect();
        let report = verify_branching(&c28, &e7, &d, &hw, Some(&allow)).unwrap();
        assert!(report.passed(), "{}: {:?}", hw, report);
        assert_eq!(report.total_dimension, weyl_dimension(&c28, &hw).unwrap());
        distinct.extend(allow);
    }
    assert_eq!(distinct.len(), 14);
}

#[test]
fn verify_branching_flags_problems() {
    let (c28, e7) = setup();
    let a = derive_projection_by_weight_matching(&c28, &e7).unwrap();
    let hw = w("2,0^27");
    let d = branch_with_cache(&c28, &e7, &a, &hw, &mut RepCache::new()).unwrap();
    let report = verify_branching(&c28, &e7, &d, &hw, Some(&[w("0^6,2")])).unwrap();
    assert!(report.dimension_ok());
    assert_eq!(report.outside_allow_list, vec![w("1,0^6")]);
    let report = verify_branching(&c28, &e7, &d, &w("1,0^27"), None).unwrap();
    assert!(!report.dimension_ok());
}

#[test]
fn sign_flipped_column_is_not_an_embedding() {
    let (c28, e7) = setup();
    let a = derive_projection_by_weight_matching(&c28, &e7).unwrap();
    let bad = a.with_column_negated(1);
    assert!(bad.check_defining_image(&c28, &e7, &Weight::fundamental(7, 7)).is_err());
    let hws: Vec<Weight> = TABLE.iter().map(|(h, _)| w(h)).collect();
    let mut cache = RepCache::new();
    assert!(!projections_equivalent(&c28, &e7, &a, &bad, &hws, &mut cache).unwrap());
    assert!(projections_equivalent(&c28, &e7, &a, &a, &hws, &mut cache).unwrap());
}

#[test]
fn non_dominant_input_is_rejected() {
    let (c28, e7) = setup();
    let a = derive_projection_by_weight_matching(&c28, &e7).unwrap();
    let mut hw = Weight::fundamental(28, 2);
    hw.labels_mut()[0] = -1;
    let err = branch_with_cache(&c28, &e7, &a, &hw, &mut RepCache::new()).unwrap_err();
    assert!(matches!(err, Error::NotDominant(_)));
}

#[test]
fn peel_rejects_non_characters() {
    let a2 = RootSystem::new("A2".parse().unwrap()).unwrap();
    // [1,1] once and [0,0] once: the adjoint needs [0,0] twice
    let mut residual: BTreeMap<Weight, BigInt> = [(w("1,1"), BigInt::from(1)), (w("0,0"), BigInt::from(1))].into();
    let err = peel(&a2, &mut residual, &mut RepCache::new()).unwrap_err();
    assert!(matches!(err, Error::NegativeMultiplicity { .. }));
    let mut residual: BTreeMap<Weight, BigInt> = [(w("1,1"), BigInt::from(1)), (w("0,0"), BigInt::from(3))].into();
    let d = peel(&a2, &mut residual, &mut RepCache::new()).unwrap();
    assert_eq!(d.multiplicity(&w("0,0")), BigUint::from(1u32));
    assert_eq!(d.multiplicity(&w("1,1")), BigUint::from(1u32));
}

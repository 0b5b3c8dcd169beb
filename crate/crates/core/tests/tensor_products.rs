use std::collections::BTreeMap;

use liebranch_core::repcore::{full_weight_system, weyl_dimension};
use liebranch_core::tensorprod::{tensor_decompose, tensor_fold};
use liebranch_core::{AlgebraType, Decomposition, RepCache, RootSystem, Weight};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn rs(name: &str) -> RootSystem {
    RootSystem::new(name.parse::<AlgebraType>().unwrap()).unwrap()
}

fn w(s: &str) -> Weight {
    s.parse().unwrap()
}

/// Multiplies full characters weight by weight and strips irreducible
/// characters from the top.
fn brute_force(r: &RootSystem, a: &Weight, b: &Weight) -> Decomposition {
    let fa = full_weight_system(r, a).unwrap();
    let fb = full_weight_system(r, b).unwrap();
    let mut product: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (x, mx) in fa.iter() {
        for (y, my) in fb.iter() {
            *product.entry(x + y).or_default() += BigInt::from(mx * my);
        }
    }
    let mut out = Decomposition::new(r.rank());
    loop {
        product.retain(|_, m| !m.is_zero());
        let Some(top) = product.keys().max_by_key(|k| r.level(k)).cloned() else {
            break;
        };
        assert!(top.is_dominant());
        let m = product[&top].clone();
        assert!(m.is_positive());
        for (x, mx) in full_weight_system(r, &top).unwrap().iter() {
            *product.entry(x.clone()).or_default() -= &m * BigInt::from(mx.clone());
        }
        out.add(top, &m.to_biguint().unwrap());
    }
    out
}

fn dims(r: &RootSystem, d: &Decomposition) -> BTreeMap<BigUint, BigUint> {
    let mut out = BTreeMap::new();
    for (hw, m) in d.iter() {
        *out.entry(weyl_dimension(r, hw).unwrap()).or_default() += m;
    }
    out
}

fn expect(pairs: &[(u64, u64)]) -> BTreeMap<BigUint, BigUint> {
    pairs.iter().map(|&(d, m)| (BigUint::from(d), BigUint::from(m))).collect()
}

#[test]
fn sl2_clebsch_gordan() {
    let a1 = rs("A1");
    let d = tensor_decompose(&a1, &w("3"), &w("2"), &mut RepCache::new()).unwrap();
    let got: Vec<_> = d.iter().map(|(hw, m)| (hw[0], m.clone())).collect();
    let one = BigUint::from(1u32);
    assert_eq!(got, vec![(1, one.clone()), (3, one.clone()), (5, one)]);
}

#[test]
fn sl3_octet_squared() {
    let a2 = rs("A2");
    let d = tensor_decompose(&a2, &w("1,1"), &w("1,1"), &mut RepCache::new()).unwrap();
    assert_eq!(d.multiplicity(&w("1,1")), BigUint::from(2u32));
    assert_eq!(dims(&a2, &d), expect(&[(27, 1), (10, 2), (8, 2), (1, 1)]));
}

#[test]
fn symplectic_tensor_table() {
    let c28 = rs("C28");
    let mut cache = RepCache::new();
    let v = w("1,0^27");
    let cases: [(Vec<Weight>, &[(u64, u64)]); 4] = [
        (vec![v.clone(), v.clone()], &[(1596, 1), (1539, 1), (1, 1)]),
        (vec![v.clone(), w("0,1,0^26")], &[(58464, 1), (27664, 1), (56, 1)]),
        (vec![v.clone(), w("2,0^27")], &[(58464, 1), (30856, 1), (56, 1)]),
        (vec![v.clone(), v.clone(), v.clone()], &[(58464, 2), (30856, 1), (27664, 1), (56, 3)]),
    ];
    let totals = [3136u64, 86184, 89376, 175616];
    for ((factors, want), total) in cases.iter().zip(totals) {
        let d = tensor_fold(&c28, factors, &mut cache).unwrap();
        assert_eq!(dims(&c28, &d), expect(want));
        assert_eq!(d.total_dimension(&c28).unwrap(), BigUint::from(total));
    }
    let triple = tensor_fold(&c28, &[v.clone(), v.clone(), v], &mut cache).unwrap();
    assert_eq!(triple.multiplicity(&w("1,1,0^26")), BigUint::from(2u32));
    assert_eq!(triple.multiplicity(&w("1,0^27")), BigUint::from(3u32));
}

#[test]
fn empty_fold_is_rejected() {
    assert!(tensor_fold(&rs("A2"), &[], &mut RepCache::new()).is_err());
}

#[test]
fn non_dominant_factor_is_rejected() {
    assert!(tensor_decompose(&rs("A2"), &w("1,-1"), &w("1,0"), &mut RepCache::new()).is_err());
}

fn pair(rank: usize) -> impl Strategy<Value = (Weight, Weight)> {
    let lab = move || prop::collection::vec(0..=2i32, rank).prop_map(Weight::new);
    (lab(), lab())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn klimyk_matches_brute_force_a2((a, b) in pair(2)) {
        let r = rs("A2");
        let fast = tensor_decompose(&r, &a, &b, &mut RepCache::new()).unwrap();
        prop_assert_eq!(fast, brute_force(&r, &a, &b));
    }

    #[test]
    fn klimyk_matches_brute_force_c2((a, b) in pair(2)) {
        let r = rs("C2");
        let fast = tensor_decompose(&r, &a, &b, &mut RepCache::new()).unwrap();
        prop_assert_eq!(fast, brute_force(&r, &a, &b));
    }

    #[test]
    fn tensor_product_is_commutative((a, b) in pair(2)) {
        for name in ["A2", "C2", "G2"] {
            let r = rs(name);
            let mut cache = RepCache::new();
            let ab = tensor_decompose(&r, &a, &b, &mut cache).unwrap();
            let ba = tensor_decompose(&r, &b, &a, &mut cache).unwrap();
            prop_assert_eq!(&ab, &ba);
            let product = weyl_dimension(&r, &a).unwrap() * weyl_dimension(&r, &b).unwrap();
            prop_assert_eq!(ab.total_dimension(&r).unwrap(), product);
        }
    }
}

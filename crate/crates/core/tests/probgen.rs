mod support;

use num_bigint::BigInt;
use probgen::catalog::Catalog;
use probgen::classes::conjugacy_classes;
use probgen::probgen::{
    approx_p, nongeneration_profile, permutation_character, permutation_character_by_counting,
    random_check_uniform_spread, ratio, spread_bound, Rational,
};
use proptest::prelude::*;

use support::{generates, images};

#[test]
fn nongeneration_is_bounded_by_sigma() {
    let catalog = Catalog::bundled();
    for name in ["A5", "A6", "A7", "L3(2)", "M11"] {
        let entry = catalog.get(name).unwrap();
        let g = entry.group().unwrap();
        let classes = conjugacy_classes(&g).unwrap();
        let chars: Vec<_> = entry.maxes().unwrap().iter().map(|m| permutation_character(&g, m).unwrap()).collect();
        let top = classes.classes().iter().map(|c| c.element_order).max().unwrap();
        for s in classes.classes().iter().filter(|c| c.element_order == top) {
            let psi = approx_p(&chars, s.index, classes.len()).unwrap();
            for x in &classes.classes()[1..] {
                let p = nongeneration_profile(&g, &x.representative, &[s.index]).unwrap()[0].1.clone();
                assert!(p <= psi.values[x.index], "{name}: P({}, {}) = {p} > {}", x.label, s.label, psi.values[x.index]);
            }
        }
    }
}

#[test]
fn characters_by_counting_agree() {
    let catalog = Catalog::bundled();
    for name in ["A5", "A6", "L3(2)", "L2(11)", "M11", "S5", "S6"] {
        let entry = catalog.get(name).unwrap();
        let g = entry.group().unwrap();
        let classes = conjugacy_classes(&g).unwrap();
        for m in entry.maxes().unwrap() {
            let a = permutation_character(&g, &m).unwrap();
            let b = permutation_character_by_counting(&g, &m).unwrap();
            assert_eq!(a.values, b.values, "{name}");
            assert_eq!(a.values[0] as u128, g.order() / m.order());
            assert_eq!(a.burnside_sum(&classes), g.order());
        }
    }
}

#[test]
fn spread_certificates_verify_independently() {
    let catalog = Catalog::bundled();
    let g = catalog.get("A7").unwrap().group().unwrap();
    let classes = conjugacy_classes(&g).unwrap();
    let pick = |order: u64, size: u128| {
        classes.classes().iter().find(|c| c.element_order == order && c.size == size).unwrap().representative.clone()
    };
    let tuple = [pick(2, 105), pick(3, 280)];
    let s = pick(7, 360);
    for seed in 0..10 {
        let cert = random_check_uniform_spread(&g, &tuple, &s, 80, seed).unwrap();
        assert!(cert.is_success());
        assert_eq!(cert.witnesses.len(), cert.trials.len());
        for w in &cert.witnesses {
            assert_eq!(w.conjugate.order(), 7);
            for x in &w.tuple {
                assert!(generates(&images(x, 7), &images(&w.conjugate, 7), 2520));
            }
        }
    }
}

#[test]
fn spread_certificates_are_reproducible() {
    let catalog = Catalog::bundled();
    let g = catalog.get("A6").unwrap().group().unwrap();
    let classes = conjugacy_classes(&g).unwrap();
    let tuple: Vec<_> = classes.classes()[1..3].iter().map(|c| c.representative.clone()).collect();
    let s = classes.classes().iter().find(|c| c.element_order == 4).unwrap().representative.clone();
    let a = random_check_uniform_spread(&g, &tuple, &s, 40, 17).unwrap();
    let b = random_check_uniform_spread(&g, &tuple, &s, 40, 17).unwrap();
    assert_eq!(a.to_string(), b.to_string());
    assert_eq!(a.trials, b.trials);
}

proptest! {
    #[test]
    fn spread_bound_is_largest_safe_tuple_size(num in 1u64..200, den in 1u64..200) {
        let sigma = Rational::new(BigInt::from(num), BigInt::from(den));
        let one = ratio(1, 1);
        let mut k = 0u64;
        while Rational::from_integer(BigInt::from(k + 1)) * &sigma < one {
            k += 1;
        }
        let bound = spread_bound(&sigma).unwrap();
        prop_assert_eq!(&bound, &BigInt::from(k));
        if sigma <= ratio(1, 2) {
            prop_assert!(bound >= BigInt::from(1));
        }
        if sigma < ratio(1, 3) {
            prop_assert!(bound >= BigInt::from(2));
        }
    }
}

#[test]
fn zero_sigma_has_no_bound() {
    assert_eq!(spread_bound(&ratio(0, 1)), None);
}

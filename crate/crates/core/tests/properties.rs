use std::cmp::Ordering;

use proptest::prelude::*;

use orderword::order::{check_ascent_hosts, check_overlaps, decompose, Comparator, SignCache};
use orderword::verify::{enumerate_cyclically_reduced, Dedup};
use orderword::{is_ascent, is_descent, maximal_ascent, mu, parse_word, reduce, Algorithm, Letter, MagnusOrder, Sign, Word};

fn letter() -> impl Strategy<Value = Letter> {
    (1u32..=2, any::<bool>()).prop_map(|(g, pos)| Letter::new(g, if pos { Sign::Positive } else { Sign::Negative }).unwrap())
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(letter(), 0..=max_len).prop_map(|ls| reduce(2, &ls).unwrap())
}

fn cyclic_word(max_len: usize) -> impl Strategy<Value = Word> {
    word(max_len).prop_map(|w| w.cyclically_reduce().0).prop_filter("nonempty", |w| !w.is_empty())
}

fn nonperiodic_word(max_len: usize) -> impl Strategy<Value = Word> {
    cyclic_word(max_len).prop_filter("decomposable", |w| w.len() > 1 && !w.is_periodic().unwrap())
}

fn order() -> impl Strategy<Value = MagnusOrder> {
    prop_oneof![Just(MagnusOrder::canonical(2)), Just(MagnusOrder::swapped(2))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn homomorphism(v in word(12), w in word(12), d in 1u32..=6) {
        prop_assert_eq!(mu(&v.mul(&w), d), mu(&v, d).mul(&mu(&w, d)).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn reduce_is_idempotent(ls in prop::collection::vec(letter(), 0..20)) {
        let once = reduce(2, &ls).unwrap();
        prop_assert!(once.len() <= ls.len());
        prop_assert_eq!(reduce(2, once.letters()).unwrap(), once.clone());
        prop_assert!(once.mul(&once.inverse()).is_empty());
        prop_assert_eq!(once.inverse().inverse(), once);
    }

    #[test]
    fn text_round_trip(w in word(8)) {
        prop_assert_eq!(parse_word(&w.to_string(), 2).unwrap(), w);
    }

    #[test]
    fn cyclic_reduction_conjugates(w in word(12)) {
        let (core, conj) = w.cyclically_reduce();
        prop_assert!(core.is_cyclically_reduced());
        prop_assert_eq!(conj.mul(&core).mul(&conj.inverse()), w);
    }

    #[test]
    fn rotations_are_conjugates(w in cyclic_word(10)) {
        let set = w.rotation_set().unwrap();
        prop_assert_eq!(set.elements().len(), 2 * w.len());
        for r in set.iter() {
            prop_assert!(r.word.is_cyclically_reduced());
            let source = if r.origin == orderword::Origin::FromWord { w.clone() } else { w.inverse() };
            let u = source.prefix(r.offset);
            prop_assert_eq!(u.inverse().mul(&source).mul(&u), r.word.clone());
        }
    }

    #[test]
    fn primitive_root_reconstructs(w in cyclic_word(12)) {
        let (root, exponent) = w.primitive_root().unwrap();
        prop_assert_eq!(root.pow(exponent), w.clone());
        prop_assert_eq!(w.len() % exponent, 0);
        for p in 1..root.len() {
            if w.len() % p == 0 {
                prop_assert_ne!(w.prefix(p).pow(w.len() / p), w.clone());
            }
        }
        let from_w: Vec<Word> = (0..w.len()).map(|i| w.rotate(i)).collect();
        let distinct = from_w.iter().collect::<std::collections::HashSet<_>>().len() == from_w.len();
        prop_assert_eq!(distinct, exponent == 1);
    }

    #[test]
    fn unique_positioning_is_class_invariant(w in cyclic_word(8), u in word(3)) {
        prop_assume!(!u.is_empty());
        let expected = w.rotation_set().unwrap().uniquely_positioned(&u).unwrap();
        for r in w.rotation_set().unwrap().iter() {
            prop_assert_eq!(r.word.rotation_set().unwrap().uniquely_positioned(&u).unwrap(), expected);
        }
    }

    #[test]
    fn inverse_series(w in word(10), d in 1u32..=6) {
        prop_assert!(mu(&w, d).mul(&mu(&w.inverse(), d)).unwrap().is_one());
    }

    #[test]
    fn linear_terms_are_exponent_sums(w in word(12)) {
        let s = mu(&w, 1);
        for (g, sum) in w.exponent_sums().into_iter().enumerate() {
            prop_assert_eq!(s.coefficient(&orderword::Monomial::new(vec![g as u32 + 1])), sum.into());
        }
    }

    #[test]
    fn bi_invariance(v in word(8), w in word(8), u in word(6), z in word(6), order in order()) {
        let before = order.compare(&v, &w).unwrap();
        let after = order.compare(&u.mul(&v).mul(&z), &u.mul(&w).mul(&z)).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn antisymmetry_and_transitivity(a in word(8), b in word(8), c in word(8), order in order()) {
        let ab = order.compare(&a, &b).unwrap();
        prop_assert_eq!(order.compare(&b, &a).unwrap(), ab.reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        let bc = order.compare(&b, &c).unwrap();
        if ab.is_gt() && bc.is_gt() {
            prop_assert!(order.compare(&a, &c).unwrap().is_gt());
        }
    }

    #[test]
    fn sign_agrees_with_compare(w in word(10), order in order()) {
        prop_assert_eq!(order.sign(&w).unwrap(), order.compare(&w, &Word::identity(2)).unwrap());
    }

    #[test]
    fn descent_is_inverse_of_ascent(u in word(8), order in order()) {
        prop_assert_eq!(is_descent(&u, &order).unwrap(), is_ascent(&u.inverse(), &order).unwrap());
    }

    #[test]
    fn peak_low_slice_is_ascent(w in word(10), order in order()) {
        let p = orderword::prefix_profile(&w, &order).unwrap();
        if let Some(candidate) = p.ascent_candidate() {
            prop_assert!(is_ascent(&candidate, &order).unwrap());
        }
        if !w.is_empty() {
            prop_assert_ne!(p.peak_index, p.low_index);
        }
    }

    #[test]
    fn decomposition_invariants(w in nonperiodic_word(12), order in order()) {
        let d = decompose(&w, &order).unwrap();
        prop_assert_eq!(d.ascent.mul(&d.descent), d.chosen.clone());
        prop_assert_eq!(d.chosen.len(), d.ascent.len() + d.descent.len());
        prop_assert!(is_ascent(&d.ascent, &order).unwrap());
        prop_assert!(d.descent.is_empty() || is_descent(&d.descent, &order).unwrap());
        prop_assert!(w.rotation_set().unwrap().uniquely_positioned(&d.ascent).unwrap());
    }
}

#[test]
fn overlap_and_host_properties_exhaustive() {
    for order in [MagnusOrder::canonical(2), MagnusOrder::swapped(2)] {
        for len in 1..=8 {
            for w in enumerate_cyclically_reduced(2, len, Dedup::RotationClass) {
                let mut signs = SignCache::new(&order);
                let rotations = w.rotation_set().unwrap();
                for r in rotations.iter() {
                    let found = check_overlaps(&r.word, &mut signs).unwrap();
                    assert!(found.is_empty(), "{w}: {found:?}");
                }
                let ascent = maximal_ascent(&w, &order, Algorithm::PeakLow).unwrap().ascent;
                let found = check_ascent_hosts(&rotations, &ascent, &mut signs).unwrap();
                assert!(found.is_empty(), "{w}: {found:?}");
            }
        }
    }
}

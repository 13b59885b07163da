use proptest::prelude::*;

use coxbruhat::bruhat::{covers, leq, lower_interval};
use coxbruhat::coset_max::{all_choice_maxima, max_in_coset, max_in_parabolic};
use coxbruhat::oracle::braid_equal;
use coxbruhat::parabolic::{coset_rep, decompose, in_parabolic, is_min_rep, min_reps_leq};
use coxbruhat::presets;
use coxbruhat::{CoxeterSystem, Element, GenSet, Side};

fn systems() -> Vec<CoxeterSystem> {
    vec![
        presets::type_a(3),
        presets::type_b(3),
        presets::type_h(3),
        presets::dihedral(0),
        presets::affine_a(2),
    ]
}

/// (system index, word over its generators)
fn system_and_word(max_len: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..systems().len()).prop_flat_map(move |i| {
        let rank = systems()[i].rank();
        (Just(i), prop::collection::vec(0..rank, 0..=max_len))
    })
}

/// (system index, three words over its generators)
fn system_and_words(max_len: usize) -> impl Strategy<Value = (usize, [Vec<usize>; 3])> {
    (0..systems().len()).prop_flat_map(move |i| {
        let rank = systems()[i].rank();
        let word = || prop::collection::vec(0..rank, 0..=max_len);
        (Just(i), [word(), word(), word()])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normalize_is_idempotent((i, word) in system_and_word(14)) {
        let sys = &systems()[i];
        let w = sys.normalize(&word).unwrap();
        prop_assert_eq!(sys.normalize(w.word()).unwrap(), w.clone());
        prop_assert!(w.length() <= word.len());
        prop_assert_eq!((word.len() - w.length()) % 2, 0);
    }

    #[test]
    fn inverse_and_multiply((i, [a, b, _]) in system_and_words(10)) {
        let sys = &systems()[i];
        let a = sys.normalize(&a).unwrap();
        let b = sys.normalize(&b).unwrap();
        let ab = sys.multiply(&a, &b).unwrap();
        prop_assert!(sys.multiply(&ab, &sys.inverse(&b)).unwrap() == a);
        prop_assert_eq!(sys.inverse(&sys.inverse(&a)), a);
    }

    #[test]
    fn star_is_associative((i, words) in system_and_words(6)) {
        let sys = &systems()[i];
        let [a, b, c] = words.map(|w| sys.normalize(&w).unwrap());
        let left = sys.star(&sys.star(&a, &b).unwrap(), &c).unwrap();
        let right = sys.star(&a, &sys.star(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        // a ⋆ b dominates a·b and both factors
        let ab = sys.star(&a, &b).unwrap();
        prop_assert!(leq(sys, &sys.multiply(&a, &b).unwrap(), &ab));
        prop_assert!(leq(sys, &a, &ab) && leq(sys, &b, &ab));
    }

    #[test]
    fn star_of_word_bounds_product((i, word) in system_and_word(10)) {
        let sys = &systems()[i];
        let product = sys.normalize(&word).unwrap();
        let starred = sys.star_fold(&word).unwrap();
        prop_assert!(leq(sys, &product, &starred));
        // a word is reduced exactly when the Demazure product loses nothing
        prop_assert_eq!(starred.length() == word.len(), product.length() == word.len());
        if product.length() == word.len() {
            prop_assert_eq!(&product, &starred);
        }
    }

    #[test]
    fn parabolic_decomposition_is_length_additive((i, word) in system_and_word(10), bits in 0u64..8) {
        let sys = &systems()[i];
        let w = sys.normalize(&word).unwrap();
        let j = GenSet::from_bits(bits).intersection(sys.all_generators());
        for side in [Side::Right, Side::Left] {
            let d = decompose(sys, &w, j, side);
            prop_assert!(is_min_rep(sys, &d.v, j, side));
            prop_assert!(in_parabolic(sys, &d.u, j));
            prop_assert_eq!(d.v.length() + d.u.length(), w.length());
            let back = match side {
                Side::Right => sys.multiply(&d.v, &d.u).unwrap(),
                Side::Left => sys.multiply(&d.u, &d.v).unwrap(),
            };
            prop_assert_eq!(back, w.clone());
        }
    }

    #[test]
    fn parabolic_max_is_the_top((i, word) in system_and_word(7), bits in 0u64..8) {
        let sys = &systems()[i];
        let w = sys.normalize(&word).unwrap();
        let j = GenSet::from_bits(bits).intersection(sys.all_generators());
        let top = max_in_parabolic(sys, &w, j);
        let members = lower_interval(sys, &w).unwrap().members;
        prop_assert!(members.contains(&top));
        for y in members.iter().filter(|y| in_parabolic(sys, y, j)) {
            prop_assert!(leq(sys, y, &top));
        }
    }
}

#[test]
fn bruhat_is_a_partial_order() {
    for sys in [presets::type_a(3), presets::type_b(3)] {
        let all = sys.all_elements().unwrap();
        for a in &all {
            assert!(leq(&sys, a, a));
            for b in &all {
                if a != b && leq(&sys, a, b) {
                    assert!(!leq(&sys, b, a));
                    assert!(a.length() < b.length());
                }
            }
        }
        // transitivity through covers
        for w in &all {
            for c in covers(&sys, w).unwrap() {
                assert_eq!(c.length() + 1, w.length());
                for d in covers(&sys, &c).unwrap() {
                    assert!(leq(&sys, &d, w));
                }
            }
        }
    }
}

#[test]
fn s_star_s_is_s() {
    for sys in systems() {
        for s in 0..sys.rank() {
            let g = sys.generator(s);
            assert_eq!(sys.star(&g, &g).unwrap(), g);
        }
    }
}

#[test]
fn min_reps_are_the_coset_representatives() {
    let sys = presets::type_b(3);
    for w in sys.all_elements().unwrap() {
        let interval = lower_interval(&sys, &w).unwrap();
        for j in sys.all_generators().subsets() {
            let mut reps: Vec<Element> = interval.members.iter().map(|y| coset_rep(&sys, y, j)).collect();
            reps.sort();
            reps.dedup();
            assert_eq!(min_reps_leq(&sys, &w, j).unwrap(), reps);
        }
    }
}

/// For `l(x) = 1` the construction's `J'` reduces to the generators of `J`
/// commuting with `x`.
#[test]
fn length_one_outline() {
    for sys in [presets::type_a(3), presets::type_b(3), presets::type_h(3)] {
        for w in sys.all_elements().unwrap() {
            for j in sys.all_generators().subsets() {
                for s in 0..sys.rank() {
                    let x = sys.generator(s);
                    if j.contains(s) || !leq(&sys, &x, &w) {
                        continue;
                    }
                    let r = max_in_coset(&sys, &w, &x, j).unwrap();
                    let expected: GenSet = j.iter().filter(|&t| sys.order(s, t) == 2).collect();
                    assert_eq!(r.trace[0].j_prime, expected);
                    assert_eq!(r.trace[0].s, s);
                }
            }
        }
    }
}

#[test]
fn choice_independence_on_h3_sample() {
    let sys = presets::type_h(3);
    for w in sys.elements_up_to(7).unwrap().iter().step_by(5) {
        for j in sys.all_generators().subsets() {
            for x in min_reps_leq(&sys, w, j).unwrap() {
                assert_eq!(all_choice_maxima(&sys, w, &x, j).unwrap().len(), 1);
            }
        }
    }
}

#[test]
fn normalize_agrees_with_braid_oracle_on_h3() {
    let sys = presets::type_h(3);
    let mut word = Vec::new();
    for len in 0..=7 {
        for code in 0..3usize.pow(len) {
            word.clear();
            let mut c = code;
            for _ in 0..len {
                word.push(c % 3);
                c /= 3;
            }
            if code % 7 != 0 {
                continue;
            }
            let w = sys.normalize(&word).unwrap();
            assert!(braid_equal(&sys, &word, w.word()).unwrap(), "{word:?}");
        }
    }
}

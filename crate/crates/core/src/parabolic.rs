//! Minimal coset representatives and parabolic decompositions.

use crate::bruhat::lower_interval;
use crate::coxeter::{CoxeterSystem, Element, GenSet, Side};
use crate::error::{Error, Result};

/// A length-additive factorization with respect to `W_J`.
///
/// On the right side `w = v u` with `v` in `W^J`; on the left side
/// `w = u v` with `v` minimal in `W_J \ W`. In both cases `u` lies in `W_J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicDecomposition {
    pub v: Element,
    pub u: Element,
    pub side: Side,
    pub j: GenSet,
}

/// Whether `w` has no descent in `j` on the given side.
pub fn is_min_rep(sys: &CoxeterSystem, w: &Element, j: GenSet, side: Side) -> bool {
    j.iter().all(|s| match side {
        Side::Right => !sys.is_right_descent(w, s),
        Side::Left => !sys.is_left_descent(w, s),
    })
}

/// Whether `w` lies in the parabolic subgroup `W_J`.
pub fn in_parabolic(sys: &CoxeterSystem, w: &Element, j: GenSet) -> bool {
    sys.support(w).is_subset(j)
}

fn smallest_descent_in(sys: &CoxeterSystem, w: &Element, j: GenSet, side: Side) -> Option<usize> {
    j.iter().find(|&s| match side {
        Side::Right => sys.is_right_descent(w, s),
        Side::Left => sys.is_left_descent(w, s),
    })
}

/// Strips descents lying in `j` off the chosen side of `w` until none remain.
pub fn decompose(sys: &CoxeterSystem, w: &Element, j: GenSet, side: Side) -> ParabolicDecomposition {
    let mut v = w.clone();
    let mut u = Element::identity();
    while let Some(s) = smallest_descent_in(sys, &v, j, side) {
        // lengths only shrink on v and grow on u by the same amount
        match side {
            Side::Right => {
                v = sys.right_mul_gen(&v, s).expect("removing a descent shortens");
                u = sys.left_mul_gen(s, &u).expect("u stays no longer than w");
            }
            Side::Left => {
                v = sys.left_mul_gen(s, &v).expect("removing a descent shortens");
                u = sys.right_mul_gen(&u, s).expect("u stays no longer than w");
            }
        }
    }
    ParabolicDecomposition { v, u, side, j }
}

/// The unique `x` in `W^J` with `w` in `x W_J`.
pub fn coset_rep(sys: &CoxeterSystem, w: &Element, j: GenSet) -> Element {
    decompose(sys, w, j, Side::Right).v
}

/// `[e, w]` intersected with `W^J`, ShortLex-sorted.
pub fn min_reps_leq(sys: &CoxeterSystem, w: &Element, j: GenSet) -> Result<Vec<Element>> {
    Ok(lower_interval(sys, w)?
        .members
        .into_iter()
        .filter(|x| is_min_rep(sys, x, j, Side::Right))
        .collect())
}

/// Splits `w` in `W^J` as `x y` with `x` in `W^K` and `y` in `W^J` ∩ `W_K`.
pub fn relative_rep(
    sys: &CoxeterSystem,
    w: &Element,
    j: GenSet,
    k: GenSet,
) -> Result<(Element, Element)> {
    if !j.is_subset(k) {
        return Err(Error::BadSubsetChain);
    }
    if !is_min_rep(sys, w, j, Side::Right) {
        return Err(Error::NotMinimalRep(sys.format(w)));
    }
    let d = decompose(sys, w, k, Side::Right);
    Ok((d.v, d.u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    fn el(sys: &CoxeterSystem, s: &str) -> Element {
        sys.parse_element(s).unwrap()
    }

    fn gs(sys: &CoxeterSystem, s: &str) -> GenSet {
        sys.parse_genset(s).unwrap()
    }

    #[test]
    fn min_rep_examples() {
        let sys = presets::type_a(3);
        let j = gs(&sys, "s1,s2");
        assert!(is_min_rep(&sys, &sys.identity(), j, Side::Right));
        assert!(is_min_rep(&sys, &el(&sys, "s2s3"), j, Side::Right));
        assert!(!is_min_rep(&sys, &el(&sys, "s1s2s1"), j, Side::Right));
    }

    #[test]
    fn right_decomposition_of_4231() {
        let sys = presets::type_a(3);
        let d = decompose(&sys, &el(&sys, "s1s2s3s2s1"), gs(&sys, "s1,s2"), Side::Right);
        assert_eq!(sys.format(&d.v), "s1s2s3");
        assert_eq!(sys.format(&d.u), "s2s1");
    }

    #[test]
    fn left_decomposition_in_s5() {
        let sys = presets::type_a(4);
        let w = el(&sys, "s3s1s2s4s3s2s1");
        let k = GenSet::singleton(3).complement(4);
        let d = decompose(&sys, &w, k, Side::Left);
        assert_eq!(d.u, el(&sys, "s3s1s2"));
        assert_eq!(d.v, el(&sys, "s4s3s2s1"));
        assert_eq!(sys.multiply(&d.u, &d.v).unwrap(), w);
    }

    #[test]
    fn decomposition_of_parabolic_element() {
        let sys = presets::type_a(3);
        let w = el(&sys, "s1s2s1");
        let d = decompose(&sys, &w, gs(&sys, "s1,s2"), Side::Right);
        assert!(d.v.is_identity());
        assert_eq!(d.u, w);
    }

    #[test]
    fn coset_rep_examples() {
        let sys = presets::type_a(3);
        let j = gs(&sys, "s1,s2");
        assert_eq!(sys.format(&coset_rep(&sys, &el(&sys, "s2s3s2s1"), j)), "s2s3");
        assert!(coset_rep(&sys, &el(&sys, "s1s2s1"), j).is_identity());
        let s5 = presets::type_a(4);
        let x = coset_rep(&s5, &el(&s5, "s4s3s4s1s2s1"), gs(&s5, "s1,s2,s4"));
        assert_eq!(s5.format(&x), "s4s3");
    }

    #[test]
    fn min_reps_leq_examples() {
        let sys = presets::type_a(3);
        let j = gs(&sys, "s1,s2");
        let reps = min_reps_leq(&sys, &el(&sys, "s1s2s3s2s1"), j).unwrap();
        let names: Vec<String> = reps.iter().map(|x| sys.format(x)).collect();
        assert_eq!(names, ["e", "s3", "s2s3", "s1s2s3"]);
        assert_eq!(min_reps_leq(&sys, &sys.identity(), j).unwrap(), vec![sys.identity()]);
        assert_eq!(
            min_reps_leq(&sys, &el(&sys, "s1s2s1"), j).unwrap(),
            vec![sys.identity()]
        );
    }

    #[test]
    fn relative_rep_examples() {
        let sys = presets::type_a(3);
        let k = gs(&sys, "s1,s2");
        let w = el(&sys, "s2s3");
        assert_eq!(relative_rep(&sys, &w, GenSet::EMPTY, k).unwrap(), (w.clone(), sys.identity()));
        let w = el(&sys, "s1s2s3s2s1");
        let d = decompose(&sys, &w, k, Side::Right);
        assert_eq!(relative_rep(&sys, &w, GenSet::EMPTY, k).unwrap(), (d.v, d.u));
        assert_eq!(
            relative_rep(&sys, &w, gs(&sys, "s3"), k),
            Err(Error::BadSubsetChain)
        );
        assert!(matches!(
            relative_rep(&sys, &w, gs(&sys, "s1"), k),
            Err(Error::NotMinimalRep(_))
        ));
    }
}

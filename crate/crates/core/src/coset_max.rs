//! Maximal elements of lower intervals intersected with parabolic cosets.
//!
//! For `x` in `W^J` with `x <= w`, the set `[e, w] ∩ x W_J` has a unique
//! Bruhat-maximal element `q`. It is built recursively on `l(x)`:
//!
//! * `x = e`: fold the `J`-letters of a reduced word of `w` under the
//!   Demazure product.
//! * otherwise split `w = u · v` on the left with respect to `S \ D_L(x)`,
//!   let `J' = {t ∈ J ∪ S(x) : t x ∈ x W_J}`, pick `s ∈ D_L(v)`, and set
//!   `q = q' ⋆ (s · q'')` where `q'` is the maximum of `[e, u] ∩ W_{J'}` and
//!   `q''` the maximum of `[e, v] ∩ s x W_J`.
//!
//! The shift `m_J(w, x) = x⁻¹ q` lies in `W_J`.

use std::collections::BTreeSet;

use crate::bruhat::leq;
use crate::coxeter::{CoxeterSystem, Element, GenSet, Side};
use crate::error::{Error, Result};
use crate::parabolic::{coset_rep, decompose, is_min_rep, min_reps_leq};

/// One level of the recursive construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceLevel {
    pub w: Element,
    pub x: Element,
    pub left_descents_x: GenSet,
    /// Left factor of `w = u · v` with respect to `S \ D_L(x)`.
    pub u: Element,
    pub v: Element,
    pub j_prime: GenSet,
    pub s: usize,
    /// Maximum of `[e, u] ∩ W_{J'}`.
    pub q_prime: Element,
    /// Maximum of `[e, v] ∩ s x W_J`.
    pub q_double_prime: Element,
    pub q: Element,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetMaxResult {
    pub w: Element,
    pub x: Element,
    pub j: GenSet,
    /// Set for the relative version: the larger parabolic `K`.
    pub k: Option<GenSet>,
    /// The maximum.
    pub q: Element,
    /// `x⁻¹ q`.
    pub m: Element,
    /// Recursion levels, outermost first. Empty when `x = e`.
    pub trace: Vec<TraceLevel>,
}

/// `x ↦ m_J(w, x)` over every `x` in `[e, w] ∩ W^J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedMaxSet {
    pub w: Element,
    pub j: GenSet,
    /// Sorted ShortLex by `x`.
    pub pairs: Vec<(Element, Element)>,
    /// The distinct shifts `M_J(w)`, sorted ShortLex.
    pub values: Vec<Element>,
}

impl ShiftedMaxSet {
    pub fn get(&self, x: &Element) -> Option<&Element> {
        self.pairs
            .binary_search_by(|(k, _)| k.cmp(x))
            .ok()
            .map(|i| &self.pairs[i].1)
    }
}

/// Maximum of `[e, w] ∩ W_J`.
pub fn max_in_parabolic(sys: &CoxeterSystem, w: &Element, j: GenSet) -> Element {
    let letters: Vec<usize> = w.word().iter().copied().filter(|&s| j.contains(s)).collect();
    sys.star_fold(&letters)
        .expect("the parabolic maximum is no longer than w")
}

fn check_coset_args(sys: &CoxeterSystem, w: &Element, x: &Element, j: GenSet) -> Result<()> {
    if !is_min_rep(sys, x, j, Side::Right) {
        return Err(Error::NotMinimalRep(sys.format(x)));
    }
    if !leq(sys, x, w) {
        return Err(Error::EmptyIntersection {
            x: sys.format(x),
            w: sys.format(w),
        });
    }
    Ok(())
}

/// The pieces of one recursion level that do not depend on the choice of `s`.
struct LevelSetup {
    left_descents_x: GenSet,
    u: Element,
    v: Element,
    j_prime: GenSet,
    q_prime: Element,
}

fn level_setup(sys: &CoxeterSystem, w: &Element, x: &Element, j: GenSet) -> LevelSetup {
    let left_descents_x = sys.left_descents(x);
    let split = decompose(sys, w, left_descents_x.complement(sys.rank()), Side::Left);
    let j_prime = j
        .union(sys.support(x))
        .iter()
        .filter(|&t| {
            sys.left_mul_gen(t, x)
                .map(|tx| coset_rep(sys, &tx, j) == *x)
                .unwrap_or(false)
        })
        .collect();
    let q_prime = max_in_parabolic(sys, &split.u, j_prime);
    LevelSetup {
        left_descents_x,
        u: split.u,
        v: split.v,
        j_prime,
        q_prime,
    }
}

/// `s x`, checked to stay a minimal coset representative.
fn next_rep(sys: &CoxeterSystem, s: usize, x: &Element, j: GenSet) -> Result<Element> {
    let sx = sys.left_mul_gen(s, x)?;
    if !is_min_rep(sys, &sx, j, Side::Right) {
        return Err(Error::InternalAssertionFailed(format!(
            "{} left the minimal representatives",
            sys.format(&sx)
        )));
    }
    Ok(sx)
}

/// `q' ⋆ (s · q'')`.
fn combine(sys: &CoxeterSystem, q_prime: &Element, s: usize, q2: &Element) -> Result<Element> {
    if sys.is_left_descent(q2, s) {
        return Err(Error::InternalAssertionFailed(format!(
            "{} is a left descent of q''",
            sys.names()[s]
        )));
    }
    let sq2 = sys.left_mul_gen(s, q2)?;
    sys.star(q_prime, &sq2)
}

/// The unique maximum of `[e, w] ∩ x W_J`, with the recursion trace.
///
/// At each level the smallest-index `s ∈ D_L(v)` is used. The result is
/// checked to lie in `[e, w] ∩ x W_J` before it is returned. Results are
/// memoized on the system.
pub fn max_in_coset(
    sys: &CoxeterSystem,
    w: &Element,
    x: &Element,
    j: GenSet,
) -> Result<CosetMaxResult> {
    check_coset_args(sys, w, x, j)?;
    let key = (w.clone(), x.clone(), j);
    if let Some(hit) = sys.coset_memo.lock().expect("memo lock").get(&key) {
        return Ok(hit.clone());
    }

    let (q, trace) = if x.is_identity() {
        (max_in_parabolic(sys, w, j), Vec::new())
    } else {
        let setup = level_setup(sys, w, x, j);
        let s = sys.left_descents(&setup.v).first().ok_or_else(|| {
            Error::InternalAssertionFailed("v has no left descent".into())
        })?;
        let sx = next_rep(sys, s, x, j)?;
        let inner = max_in_coset(sys, &setup.v, &sx, j)?;
        let q = combine(sys, &setup.q_prime, s, &inner.q)?;
        let mut trace = vec![TraceLevel {
            w: w.clone(),
            x: x.clone(),
            left_descents_x: setup.left_descents_x,
            u: setup.u,
            v: setup.v,
            j_prime: setup.j_prime,
            s,
            q_prime: setup.q_prime,
            q_double_prime: inner.q.clone(),
            q: q.clone(),
        }];
        trace.extend(inner.trace);
        (q, trace)
    };

    if !leq(sys, &q, w) || coset_rep(sys, &q, j) != *x {
        return Err(Error::InternalAssertionFailed(format!(
            "constructed {} is not in [e,{}] ∩ {}W_J",
            sys.format(&q),
            sys.format(w),
            sys.format(x)
        )));
    }
    let m = sys.multiply(&sys.inverse(x), &q)?;
    if q.length() != x.length() + m.length() {
        return Err(Error::InternalAssertionFailed("x·m is not length-additive".into()));
    }
    let result = CosetMaxResult {
        w: w.clone(),
        x: x.clone(),
        j,
        k: None,
        q,
        m,
        trace,
    };
    sys.coset_memo
        .lock()
        .expect("memo lock")
        .insert(key, result.clone());
    Ok(result)
}

/// Every `q` the construction produces when `s` ranges over all of
/// `D_L(v)` at every level. A single element when the construction is
/// independent of the choice.
pub fn all_choice_maxima(
    sys: &CoxeterSystem,
    w: &Element,
    x: &Element,
    j: GenSet,
) -> Result<BTreeSet<Element>> {
    check_coset_args(sys, w, x, j)?;
    if x.is_identity() {
        return Ok(BTreeSet::from([max_in_parabolic(sys, w, j)]));
    }
    let setup = level_setup(sys, w, x, j);
    let mut out = BTreeSet::new();
    for s in sys.left_descents(&setup.v).iter() {
        let sx = next_rep(sys, s, x, j)?;
        for q2 in all_choice_maxima(sys, &setup.v, &sx, j)? {
            out.insert(combine(sys, &setup.q_prime, s, &q2)?);
        }
    }
    Ok(out)
}

/// `m_J(w, x) = x⁻¹ q`.
pub fn m_j(sys: &CoxeterSystem, w: &Element, x: &Element, j: GenSet) -> Result<Element> {
    Ok(max_in_coset(sys, w, x, j)?.m)
}

pub fn shifted_max_set(sys: &CoxeterSystem, w: &Element, j: GenSet) -> Result<ShiftedMaxSet> {
    let pairs = min_reps_leq(sys, w, j)?
        .into_iter()
        .map(|x| {
            let m = m_j(sys, w, &x, j)?;
            Ok((x, m))
        })
        .collect::<Result<Vec<_>>>()?;
    let values: BTreeSet<Element> = pairs.iter().map(|(_, m)| m.clone()).collect();
    Ok(ShiftedMaxSet {
        w: w.clone(),
        j,
        pairs,
        values: values.into_iter().collect(),
    })
}

/// The unique maximum of `[e, w]^J ∩ x W^J_K` for `J ⊆ K`, `w ∈ W^J` and
/// `x ∈ W^K`: the `W^J` representative of the `K`-coset maximum.
pub fn max_in_relative_coset(
    sys: &CoxeterSystem,
    w: &Element,
    x: &Element,
    j: GenSet,
    k: GenSet,
) -> Result<CosetMaxResult> {
    if !j.is_subset(k) {
        return Err(Error::BadSubsetChain);
    }
    if !is_min_rep(sys, w, j, Side::Right) {
        return Err(Error::NotMinimalRep(sys.format(w)));
    }
    let outer = max_in_coset(sys, w, x, k)?;
    let q = coset_rep(sys, &outer.q, j);
    let m = sys.multiply(&sys.inverse(x), &q)?;
    Ok(CosetMaxResult {
        w: w.clone(),
        x: x.clone(),
        j,
        k: Some(k),
        q,
        m,
        trace: outer.trace,
    })
}

/// `m^J_K(w, x)`.
pub fn m_relative(
    sys: &CoxeterSystem,
    w: &Element,
    x: &Element,
    j: GenSet,
    k: GenSet,
) -> Result<Element> {
    Ok(max_in_relative_coset(sys, w, x, j, k)?.m)
}

/// `x ↦ m^J_K(w, x)` over every `x` in `[e, w]^K`.
pub fn relative_shifted_max_set(
    sys: &CoxeterSystem,
    w: &Element,
    j: GenSet,
    k: GenSet,
) -> Result<ShiftedMaxSet> {
    if !j.is_subset(k) {
        return Err(Error::BadSubsetChain);
    }
    if !is_min_rep(sys, w, j, Side::Right) {
        return Err(Error::NotMinimalRep(sys.format(w)));
    }
    let pairs = min_reps_leq(sys, w, k)?
        .into_iter()
        .map(|x| {
            let m = m_relative(sys, w, &x, j, k)?;
            Ok((x, m))
        })
        .collect::<Result<Vec<_>>>()?;
    let values: BTreeSet<Element> = pairs.iter().map(|(_, m)| m.clone()).collect();
    Ok(ShiftedMaxSet {
        w: w.clone(),
        j,
        pairs,
        values: values.into_iter().collect(),
    })
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
    fn parabolic_max_examples() {
        let sys = presets::type_a(3);
        let w = el(&sys, "s1s2s3s2s1");
        assert_eq!(sys.format(&max_in_parabolic(&sys, &w, gs(&sys, "s1,s2"))), "s1s2s1");
        assert!(max_in_parabolic(&sys, &w, GenSet::EMPTY).is_identity());
        assert_eq!(max_in_parabolic(&sys, &w, sys.all_generators()), w);
    }

    #[test]
    fn coset_max_for_s2s3() {
        let sys = presets::type_a(3);
        let w = el(&sys, "s1s2s3s2s1");
        let r = max_in_coset(&sys, &w, &el(&sys, "s2s3"), gs(&sys, "s1,s2")).unwrap();
        assert_eq!(sys.format(&r.q), "s2s3s2s1");
        assert_eq!(sys.format(&r.m), "s2s1");
        let top = &r.trace[0];
        assert_eq!(top.j_prime, gs(&sys, "s3"));
        assert_eq!(sys.format(&top.q_prime), "s3");
        assert_eq!(sys.names()[top.s], "s2");
        assert_eq!(top.q_double_prime, el(&sys, "s3s1"));
    }

    #[test]
    fn coset_max_for_s3() {
        let sys = presets::type_a(3);
        let w = el(&sys, "s1s2s3s2s1");
        let r = max_in_coset(&sys, &w, &el(&sys, "s3"), gs(&sys, "s1,s2")).unwrap();
        assert_eq!(r.q, el(&sys, "s3s1s2s1"));
        assert_eq!(sys.format(&r.m), "s1s2s1");
        let top = &r.trace[0];
        assert_eq!(sys.format(&top.q_prime), "s1");
        assert_eq!(sys.format(&top.q_double_prime), "s2s1");
    }

    #[test]
    fn coset_max_in_s5() {
        let sys = presets::type_a(4);
        let w = el(&sys, "s3s1s2s4s3s2s1");
        let r = max_in_coset(&sys, &w, &el(&sys, "s4s3"), gs(&sys, "s1,s2,s4")).unwrap();
        assert_eq!(r.q, el(&sys, "s3s1s4s3s2s1"));
        assert_eq!(r.q, el(&sys, "s4s3s4s1s2s1"));
        let top = &r.trace[0];
        assert_eq!(top.j_prime, gs(&sys, "s1,s3"));
        assert_eq!(top.q_prime, el(&sys, "s3s1"));
        assert_eq!(top.q_double_prime, el(&sys, "s3s2s1"));
    }

    #[test]
    fn m_j_examples() {
        let sys = presets::type_a(3);
        let w = el(&sys, "s1s2s3s2s1");
        let j = gs(&sys, "s1,s2");
        assert_eq!(sys.format(&m_j(&sys, &w, &sys.identity(), j).unwrap()), "s1s2s1");
        assert_eq!(sys.format(&m_j(&sys, &w, &el(&sys, "s1s2s3"), j).unwrap()), "s2s1");
        let v = el(&sys, "s2s3");
        assert!(m_j(&sys, &v, &v, j).unwrap().is_identity());
    }

    #[test]
    fn argument_errors() {
        let sys = presets::type_a(3);
        let w = el(&sys, "s1s2s3s2s1");
        let j = gs(&sys, "s1,s2");
        assert!(matches!(
            max_in_coset(&sys, &w, &el(&sys, "s1"), j),
            Err(Error::NotMinimalRep(_))
        ));
        assert!(matches!(
            max_in_coset(&sys, &el(&sys, "s1s2"), &el(&sys, "s3"), j),
            Err(Error::EmptyIntersection { .. })
        ));
    }

    #[test]
    fn shifted_max_set_table() {
        let sys = presets::type_a(3);
        let w = el(&sys, "s1s2s3s2s1");
        let set = shifted_max_set(&sys, &w, gs(&sys, "s1,s2")).unwrap();
        let rows: Vec<(String, String)> = set
            .pairs
            .iter()
            .map(|(x, m)| (sys.format(x), sys.format(m)))
            .collect();
        let want = [("e", "s1s2s1"), ("s3", "s1s2s1"), ("s2s3", "s2s1"), ("s1s2s3", "s2s1")];
        assert_eq!(rows.len(), 4);
        for ((x, m), (wx, wm)) in rows.iter().zip(want) {
            assert_eq!((x.as_str(), m.as_str()), (wx, wm));
        }
        let values: Vec<String> = set.values.iter().map(|m| sys.format(m)).collect();
        assert_eq!(values, ["s2s1", "s1s2s1"]);

        let empty = shifted_max_set(&sys, &w, GenSet::EMPTY).unwrap();
        assert_eq!(empty.values, vec![sys.identity()]);
        let inside = el(&sys, "s1s2s1");
        let single = shifted_max_set(&sys, &inside, gs(&sys, "s1,s2")).unwrap();
        assert_eq!(single.pairs, vec![(sys.identity(), inside)]);
    }

    #[test]
    fn relative_with_empty_j_matches_plain() {
        let sys = presets::type_a(3);
        let w = el(&sys, "s1s2s3s2s1");
        let k = gs(&sys, "s1,s2");
        for x in min_reps_leq(&sys, &w, k).unwrap() {
            let plain = max_in_coset(&sys, &w, &x, k).unwrap();
            let rel = max_in_relative_coset(&sys, &w, &x, GenSet::EMPTY, k).unwrap();
            assert_eq!(plain.q, rel.q);
            assert_eq!(plain.m, rel.m);
        }
    }

    #[test]
    fn relative_errors() {
        let sys = presets::type_a(3);
        let w = el(&sys, "s1s2s3");
        let e = sys.identity();
        assert_eq!(
            max_in_relative_coset(&sys, &w, &e, gs(&sys, "s3"), gs(&sys, "s1,s2")),
            Err(Error::BadSubsetChain)
        );
        assert!(matches!(
            max_in_relative_coset(&sys, &w, &e, gs(&sys, "s3"), gs(&sys, "s3")),
            Err(Error::NotMinimalRep(_))
        ));
    }
}

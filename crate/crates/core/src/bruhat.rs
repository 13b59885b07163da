//! Bruhat order, lower intervals and Poincaré polynomials.

use std::collections::BTreeSet;

use crate::coxeter::{CoxeterSystem, Element};
use crate::error::{Error, Result};
use crate::polynomial::IntPolynomial;

/// The lower interval `[e, top]`, members sorted ShortLex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub top: Element,
    pub members: Vec<Element>,
    /// `rank_sizes[k]` counts members of length `k`.
    pub rank_sizes: Vec<usize>,
}

impl Interval {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, u: &Element) -> bool {
        self.members.binary_search(u).is_ok()
    }

    /// Members of length exactly `k`.
    pub fn rank(&self, k: usize) -> &[Element] {
        let start = self.members.partition_point(|m| m.length() < k);
        let end = self.members.partition_point(|m| m.length() <= k);
        &self.members[start..end]
    }

    pub fn poincare(&self) -> IntPolynomial {
        IntPolynomial::new(self.rank_sizes.iter().map(|&n| n as i64).collect())
    }

    /// Cover relations `(lower, upper)` inside the interval, ordered by the
    /// upper element then the lower one.
    pub fn cover_edges(&self, sys: &CoxeterSystem) -> Vec<(Element, Element)> {
        let mut edges = Vec::new();
        for upper in &self.members {
            let Some(k) = upper.length().checked_sub(1) else {
                continue;
            };
            for lower in self.rank(k) {
                if leq(sys, lower, upper) {
                    edges.push((lower.clone(), upper.clone()));
                }
            }
        }
        edges
    }
}

/// Bruhat comparison `u <= w`, by peeling left descents off `w`.
pub fn leq(sys: &CoxeterSystem, u: &Element, w: &Element) -> bool {
    let mut u = u.clone();
    let mut w = w.clone();
    loop {
        if u.length() > w.length() {
            return false;
        }
        if u.length() == w.length() {
            return u == w;
        }
        if u.is_identity() {
            return true;
        }
        let s = w.first_letter().expect("w is longer than u");
        w = w.strip_first();
        if sys.is_left_descent(&u, s) {
            u = sys
                .left_mul_gen(s, &u)
                .expect("multiplying by a left descent shortens");
        }
    }
}

/// All products of subwords of the canonical word of `w`, which is exactly
/// `[e, w]`. Duplicates are merged letter by letter, so each distinct prefix
/// product is multiplied out once.
pub fn lower_interval(sys: &CoxeterSystem, w: &Element) -> Result<Interval> {
    if w.length() > sys.interval_bound() {
        return Err(Error::IntervalTooLarge {
            length: w.length(),
            bound: sys.interval_bound(),
        });
    }
    let mut products: BTreeSet<Element> = BTreeSet::from([Element::identity()]);
    for &s in w.word() {
        let extended = products
            .iter()
            .map(|x| sys.right_mul_gen(x, s))
            .collect::<Result<Vec<_>>>()?;
        products.extend(extended);
    }
    Ok(interval_from_members(w.clone(), products.into_iter().collect()))
}

pub(crate) fn interval_from_members(top: Element, members: Vec<Element>) -> Interval {
    let mut rank_sizes = vec![0; top.length() + 1];
    for m in &members {
        rank_sizes[m.length()] += 1;
    }
    Interval {
        top,
        members,
        rank_sizes,
    }
}

/// Lower covers of `w`.
pub fn covers(sys: &CoxeterSystem, w: &Element) -> Result<Vec<Element>> {
    let Some(k) = w.length().checked_sub(1) else {
        return Ok(Vec::new());
    };
    let interval = lower_interval(sys, w)?;
    Ok(interval
        .rank(k)
        .iter()
        .filter(|u| leq(sys, u, w))
        .cloned()
        .collect())
}

/// `P_w(t)`, the rank generating function of `[e, w]`.
pub fn poincare(sys: &CoxeterSystem, w: &Element) -> Result<IntPolynomial> {
    Ok(lower_interval(sys, w)?.poincare())
}

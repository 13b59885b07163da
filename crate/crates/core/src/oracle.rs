//! Brute-force ground truth.
//!
//! Nothing here shares an algorithm with the engine it checks: intervals come
//! from closing under single-letter deletions over every reduced word (found
//! by braid moves), and the word problem is decided by braid-move and
//! cancellation search rather than by the reflection representation.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rayon::prelude::*;

use crate::bruhat::lower_interval;
use crate::coset_max::max_in_coset;
use crate::coxeter::{CoxeterSystem, Element, GenSet, Side, INFINITY};
use crate::error::{Error, Result};
use crate::parabolic::{coset_rep, is_min_rep, min_reps_leq};

/// Cap on the number of words visited in one braid class.
pub const BRAID_BUDGET: usize = 200_000;

/// Words reachable from `word` by one braid move.
fn braid_neighbours(sys: &CoxeterSystem, word: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..word.len() {
        let (s, t) = match (word.get(i), word.get(i + 1)) {
            (Some(&s), Some(&t)) if s != t => (s, t),
            _ => continue,
        };
        let m = sys.order(s, t);
        if m == INFINITY {
            continue;
        }
        let m = m as usize;
        if i + m > word.len() {
            continue;
        }
        let alternating = (0..m).all(|k| word[i + k] == if k % 2 == 0 { s } else { t });
        if alternating {
            let mut next = word.to_vec();
            for k in 0..m {
                next[i + k] = if k % 2 == 0 { t } else { s };
            }
            out.push(next);
        }
    }
    out
}

/// The braid-move class of `word`.
pub fn braid_class(sys: &CoxeterSystem, word: &[usize]) -> Result<BTreeSet<Vec<usize>>> {
    let mut seen = BTreeSet::from([word.to_vec()]);
    let mut queue = VecDeque::from([word.to_vec()]);
    while let Some(cur) = queue.pop_front() {
        for next in braid_neighbours(sys, &cur) {
            if seen.insert(next.clone()) {
                if seen.len() > BRAID_BUDGET {
                    return Err(Error::SearchBudgetExceeded(BRAID_BUDGET));
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// A reduced word for the element spelled by `word`: cancel an adjacent
/// `s s` somewhere in the braid class until no class member has one.
pub fn braid_reduce(sys: &CoxeterSystem, word: &[usize]) -> Result<Vec<usize>> {
    let mut word = word.to_vec();
    'outer: loop {
        for member in braid_class(sys, &word)? {
            if let Some(i) = member.windows(2).position(|p| p[0] == p[1]) {
                word = member[..i].iter().chain(&member[i + 2..]).copied().collect();
                continue 'outer;
            }
        }
        return Ok(word);
    }
}

/// Exact word problem: do the two words spell the same element?
pub fn braid_equal(sys: &CoxeterSystem, a: &[usize], b: &[usize]) -> Result<bool> {
    let ra = braid_reduce(sys, a)?;
    let rb = braid_reduce(sys, b)?;
    if ra.len() != rb.len() {
        return Ok(false);
    }
    Ok(braid_class(sys, &ra)?.contains(&rb))
}

/// `[e, w]` as the closure of `{w}` under deleting one letter from any
/// reduced word.
pub fn brute_interval(sys: &CoxeterSystem, w: &Element) -> Result<BTreeSet<Element>> {
    if w.length() > sys.interval_bound() {
        return Err(Error::IntervalTooLarge {
            length: w.length(),
            bound: sys.interval_bound(),
        });
    }
    let mut seen: HashSet<Element> = HashSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(z) = queue.pop_front() {
        for word in braid_class(sys, z.word())? {
            for i in 0..word.len() {
                let deleted: Vec<usize> =
                    word[..i].iter().chain(&word[i + 1..]).copied().collect();
                let y = sys.normalize(&deleted)?;
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// The maximum of `[e, w] ∩ x W_J` found by exhaustive search.
pub fn brute_coset_max(sys: &CoxeterSystem, w: &Element, x: &Element, j: GenSet) -> Result<Element> {
    if !is_min_rep(sys, x, j, Side::Right) {
        return Err(Error::NotMinimalRep(sys.format(x)));
    }
    let coset: Vec<Element> = brute_interval(sys, w)?
        .into_iter()
        .filter(|y| coset_rep(sys, y, j) == *x)
        .collect();
    let top_len = coset.iter().map(Element::length).max().ok_or_else(|| {
        Error::EmptyIntersection {
            x: sys.format(x),
            w: sys.format(w),
        }
    })?;
    let mut tops = coset.iter().filter(|y| y.length() == top_len);
    let q = tops.next().expect("a longest element exists").clone();
    if tops.next().is_some() {
        return Err(Error::NotUnique);
    }
    let below_q = brute_interval(sys, &q)?;
    if coset.iter().all(|y| below_q.contains(y)) {
        Ok(q)
    } else {
        Err(Error::NotUnique)
    }
}

/// Checks `[e, w ⋆ u] = {a b : a ≤ w, b ≤ u}`.
pub fn verify_interval_product(sys: &CoxeterSystem, w: &Element, u: &Element) -> Result<bool> {
    let top = sys.star(w, u)?;
    let expected: BTreeSet<Element> = lower_interval(sys, &top)?.members.into_iter().collect();
    let below_u = lower_interval(sys, u)?.members;
    let mut products = BTreeSet::new();
    for a in lower_interval(sys, w)?.members {
        for b in &below_u {
            products.insert(sys.multiply(&a, b)?);
        }
    }
    Ok(products == expected)
}

/// Outcome of a coset-maximum sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub triples: usize,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares `max_in_coset` with `brute_coset_max` for every `w` given, every
/// `J ⊆ S` and every `x ∈ [e, w] ∩ W^J`.
pub fn sweep_coset_max(sys: &CoxeterSystem, elements: &[Element]) -> SweepReport {
    let subsets: Vec<GenSet> = sys.all_generators().subsets().collect();
    let per_w: Vec<SweepReport> = elements
        .par_iter()
        .map(|w| {
            let mut report = SweepReport::default();
            for &j in &subsets {
                let reps = match min_reps_leq(sys, w, j) {
                    Ok(reps) => reps,
                    Err(e) => {
                        report.failures.push(format!("{}: {e}", sys.format(w)));
                        continue;
                    }
                };
                for x in reps {
                    report.triples += 1;
                    if let Some(msg) = check_triple(sys, w, &x, j) {
                        report.failures.push(msg);
                    }
                }
            }
            report
        })
        .collect();
    per_w.into_iter().fold(SweepReport::default(), |mut acc, r| {
        acc.triples += r.triples;
        acc.failures.extend(r.failures);
        acc
    })
}

/// `None` when engine and oracle agree on `(w, x, J)`.
pub fn check_triple(sys: &CoxeterSystem, w: &Element, x: &Element, j: GenSet) -> Option<String> {
    let label = || {
        format!(
            "w={} x={} J={}",
            sys.format(w),
            sys.format(x),
            sys.format_genset(j)
        )
    };
    match (max_in_coset(sys, w, x, j), brute_coset_max(sys, w, x, j)) {
        (Ok(r), Ok(q)) if r.q == q => None,
        (Ok(r), Ok(q)) => Some(format!(
            "{}: engine {} oracle {}",
            label(),
            sys.format(&r.q),
            sys.format(&q)
        )),
        (Err(e), _) => Some(format!("{}: engine error {}", label(), e.name())),
        (_, Err(e)) => Some(format!("{}: oracle error {}", label(), e.name())),
    }
}

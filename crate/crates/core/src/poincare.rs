//! Coset decompositions of Poincaré polynomials and BP detection.

use crate::bruhat::{lower_interval, poincare};
use crate::coset_max::{relative_shifted_max_set, shifted_max_set};
use crate::coxeter::{CoxeterSystem, Element, GenSet, Side};
use crate::error::{Error, Result};
use crate::parabolic::{decompose, is_min_rep};
use crate::polynomial::IntPolynomial;

/// One summand `t^{l(x)} · factor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareTerm {
    pub x: Element,
    pub shift: usize,
    /// The shifted maximum `m` whose polynomial is `factor`.
    pub m: Element,
    pub factor: IntPolynomial,
}

impl PoincareTerm {
    pub fn value(&self) -> IntPolynomial {
        self.factor.shift(self.shift)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareDecomposition {
    pub w: Element,
    pub j: GenSet,
    /// `Some(K)` for the relative decomposition of `P^J_w` over `[e, w]^K`.
    pub k: Option<GenSet>,
    pub terms: Vec<PoincareTerm>,
    pub total: IntPolynomial,
    /// Product form, present when every shift agrees (BP case).
    pub factorization: Option<(IntPolynomial, IntPolynomial)>,
}

impl PoincareDecomposition {
    /// Terms sharing a shift `m` collected as `(Σ t^{l(x)}, m, factor)`, in
    /// order of first appearance.
    pub fn grouped(&self) -> Vec<(IntPolynomial, Element, IntPolynomial)> {
        let mut groups: Vec<(IntPolynomial, Element, IntPolynomial)> = Vec::new();
        for term in &self.terms {
            let mono = IntPolynomial::monomial(term.shift);
            match groups.iter_mut().find(|(_, m, _)| *m == term.m) {
                Some(group) => group.0 = &group.0 + &mono,
                None => groups.push((mono, term.m.clone(), term.factor.clone())),
            }
        }
        groups
    }

    /// `(1+t)(1+2t+2t^2+t^3)+(t^2+t^3)(1+2t+t^2)` style rendering of
    /// [`grouped`](Self::grouped).
    pub fn factored(&self) -> String {
        let parts: Vec<String> = self
            .grouped()
            .iter()
            .map(|(shifts, _, factor)| {
                match (*shifts == IntPolynomial::one(), *factor == IntPolynomial::one()) {
                    (true, true) => "1".to_string(),
                    (true, false) => format!("({factor})"),
                    (false, true) => format!("({shifts})"),
                    (false, false) => format!("({shifts})({factor})"),
                }
            })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BPReport {
    pub w: Element,
    pub j: GenSet,
    pub v: Element,
    pub u: Element,
    pub u_max: Element,
    pub is_bp: bool,
    /// `(P^J_v, P_u)` when the decomposition is BP.
    pub factorization: Option<(IntPolynomial, IntPolynomial)>,
}

fn sum_terms(terms: &[PoincareTerm]) -> Result<IntPolynomial> {
    terms
        .iter()
        .try_fold(IntPolynomial::zero(), |acc, t| acc.checked_add(&t.value()))
}

/// `P_w = Σ_{x ∈ [e,w] ∩ W^J} t^{l(x)} P_{m_J(w,x)}`.
pub fn decompose_poincare(sys: &CoxeterSystem, w: &Element, j: GenSet) -> Result<PoincareDecomposition> {
    let shifts = shifted_max_set(sys, w, j)?;
    let terms = shifts
        .pairs
        .into_iter()
        .map(|(x, m)| {
            let factor = poincare(sys, &m)?;
            Ok(PoincareTerm { shift: x.length(), x, m, factor })
        })
        .collect::<Result<Vec<_>>>()?;
    let total = sum_terms(&terms)?;
    if total != poincare(sys, w)? {
        return Err(Error::InternalAssertionFailed(
            "coset decomposition does not sum to P_w".into(),
        ));
    }
    let report = bp_report(sys, w, j)?;
    Ok(PoincareDecomposition {
        w: w.clone(),
        j,
        k: None,
        terms,
        total,
        factorization: report.factorization,
    })
}

/// `P^J_w`, the rank generating function of `[e, w] ∩ W^J`.
pub fn relative_poincare(sys: &CoxeterSystem, w: &Element, j: GenSet) -> Result<IntPolynomial> {
    if !is_min_rep(sys, w, j, Side::Right) {
        return Err(Error::NotMinimalRep(sys.format(w)));
    }
    let interval = lower_interval(sys, w)?;
    Ok(IntPolynomial::from_lengths(
        interval
            .members
            .iter()
            .filter(|x| is_min_rep(sys, x, j, Side::Right))
            .map(Element::length),
    ))
}

/// Compares the right parabolic factor `u` with `u_max = m_J(w, e)`.
pub fn bp_report(sys: &CoxeterSystem, w: &Element, j: GenSet) -> Result<BPReport> {
    let d = decompose(sys, w, j, Side::Right);
    let u_max = crate::coset_max::max_in_parabolic(sys, w, j);
    let is_bp = d.u == u_max;
    let factorization = if is_bp {
        let pv = relative_poincare(sys, &d.v, j)?;
        let pu = poincare(sys, &d.u)?;
        if pv.checked_mul(&pu)? != poincare(sys, w)? {
            return Err(Error::InternalAssertionFailed(
                "BP decomposition without a matching factorization".into(),
            ));
        }
        Some((pv, pu))
    } else {
        None
    };
    Ok(BPReport {
        w: w.clone(),
        j,
        v: d.v,
        u: d.u,
        u_max,
        is_bp,
        factorization,
    })
}

/// `P^J_w = Σ_{x ∈ [e,w]^K} t^{l(x)} P^J_{m^J_K(w,x)}` for `J ⊆ K` and
/// `w ∈ W^J`. When `m^J_K(w, v) = m^J_K(w, e)` for `w = v u` split along
/// `K`, the product `P^K_v · P^J_u` is reported as well.
pub fn relative_decompose_poincare(
    sys: &CoxeterSystem,
    w: &Element,
    j: GenSet,
    k: GenSet,
) -> Result<PoincareDecomposition> {
    let shifts = relative_shifted_max_set(sys, w, j, k)?;
    let terms = shifts
        .pairs
        .iter()
        .map(|(x, m)| {
            let factor = relative_poincare(sys, m, j)?;
            Ok(PoincareTerm {
                x: x.clone(),
                shift: x.length(),
                m: m.clone(),
                factor,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let total = sum_terms(&terms)?;
    if total != relative_poincare(sys, w, j)? {
        return Err(Error::InternalAssertionFailed(
            "relative coset decomposition does not sum to P^J_w".into(),
        ));
    }
    let d = decompose(sys, w, k, Side::Right);
    let at_v = shifts.get(&d.v);
    let at_e = shifts.get(&Element::identity());
    let factorization = if at_v.is_some() && at_v == at_e {
        let pv = relative_poincare(sys, &d.v, k)?;
        let pu = relative_poincare(sys, &d.u, j)?;
        if pv.checked_mul(&pu)? != total {
            return Err(Error::InternalAssertionFailed(
                "relative BP case without a matching factorization".into(),
            ));
        }
        Some((pv, pu))
    } else {
        None
    };
    Ok(PoincareDecomposition {
        w: w.clone(),
        j,
        k: Some(k),
        terms,
        total,
        factorization,
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
    fn decomposition_of_4231() {
        let sys = presets::type_a(3);
        let w = el(&sys, "s1s2s3s2s1");
        let d = decompose_poincare(&sys, &w, gs(&sys, "s1,s2")).unwrap();
        let factors: Vec<(usize, String)> =
            d.terms.iter().map(|t| (t.shift, t.factor.to_string())).collect();
        assert_eq!(
            factors,
            [
                (0, "1+2t+2t^2+t^3".to_string()),
                (1, "1+2t+2t^2+t^3".to_string()),
                (2, "1+2t+t^2".to_string()),
                (3, "1+2t+t^2".to_string()),
            ]
        );
        assert_eq!(d.total, IntPolynomial::new(vec![1, 3, 5, 6, 4, 1]));
        assert!(d.factorization.is_none());
        assert_eq!(d.factored(), "(1+t)(1+2t+2t^2+t^3)+(t^2+t^3)(1+2t+t^2)");
    }

    #[test]
    fn decomposition_with_empty_j() {
        let sys = presets::type_a(3);
        let w = el(&sys, "s1s2s3s2s1");
        let d = decompose_poincare(&sys, &w, GenSet::EMPTY).unwrap();
        assert_eq!(d.terms.len(), 20);
        assert!(d.terms.iter().all(|t| t.factor == IntPolynomial::one()));
        assert_eq!(d.total, poincare(&sys, &w).unwrap());
    }

    #[test]
    fn relative_poincare_examples() {
        let sys = presets::type_a(3);
        let j = gs(&sys, "s1,s2");
        assert_eq!(
            relative_poincare(&sys, &el(&sys, "s1s2s3"), j).unwrap(),
            IntPolynomial::new(vec![1, 1, 1, 1])
        );
        let w = el(&sys, "s1s2s3s2s1");
        assert_eq!(
            relative_poincare(&sys, &w, GenSet::EMPTY).unwrap(),
            poincare(&sys, &w).unwrap()
        );
        assert_eq!(relative_poincare(&sys, &sys.identity(), j).unwrap(), IntPolynomial::one());
        assert!(matches!(
            relative_poincare(&sys, &w, j),
            Err(Error::NotMinimalRep(_))
        ));
    }

    #[test]
    fn bp_examples() {
        let sys = presets::type_a(3);
        let j = gs(&sys, "s1,s2");
        let r = bp_report(&sys, &el(&sys, "s1s2s3s2s1"), j).unwrap();
        assert!(!r.is_bp);
        assert_eq!(sys.format(&r.u), "s2s1");
        assert_eq!(sys.format(&r.u_max), "s1s2s1");
        assert!(r.factorization.is_none());

        let w = el(&sys, "s1s2s3s2s1");
        let r = bp_report(&sys, &w, GenSet::EMPTY).unwrap();
        assert!(r.is_bp);
        assert_eq!(r.factorization, Some((poincare(&sys, &w).unwrap(), IntPolynomial::one())));

        let r = bp_report(&sys, &el(&sys, "s3s2s1"), j).unwrap();
        assert!(r.is_bp);
        assert_eq!(sys.format(&r.u), "s2s1");
    }

    #[test]
    fn relative_degenerate_cases() {
        let sys = presets::type_a(3);
        let k = gs(&sys, "s1,s2");
        let w = el(&sys, "s1s2s3s2s1");
        let rel = relative_decompose_poincare(&sys, &w, GenSet::EMPTY, k).unwrap();
        let plain = decompose_poincare(&sys, &w, k).unwrap();
        assert_eq!(rel.total, plain.total);
        assert_eq!(rel.terms, plain.terms);

        let j = gs(&sys, "s1");
        let w = el(&sys, "s1s2s3");
        let same = relative_decompose_poincare(&sys, &w, j, j).unwrap();
        assert_eq!(same.total, relative_poincare(&sys, &w, j).unwrap());
        assert!(same.terms.iter().all(|t| t.m.is_identity()));
    }
}

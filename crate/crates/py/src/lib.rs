//! Python bindings: `import coxbruhat`.
//!
//! ```python
//! import coxbruhat
//! a3 = coxbruhat.CoxeterSystem.from_type("A3")
//! w = a3.element("s1 s2 s3 s2 s1")
//! a3.m_j(w, a3.element("s2s3"), "s1,s2")   # Element s2s1
//! ```

use std::sync::Arc;

use pyo3::basic::CompareOp;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use coxbruhat_core::{bruhat, coset_max, hasse, oracle, parabolic, poincare, presets};
use coxbruhat_core::{CoxeterSystem as System, Element as Elem, Error, GenSet, IntPolynomial, Side};

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(format!("{}: {e}", e.name()))
}

type PyRes<T> = PyResult<T>;

/// A Coxeter system with named generators.
#[pyclass(name = "CoxeterSystem", module = "coxbruhat", frozen)]
pub struct CoxeterSystem {
    sys: Arc<System>,
}

/// A group element, stored as its ShortLex-least reduced word.
#[pyclass(name = "Element", module = "coxbruhat", frozen, from_py_object)]
#[derive(Clone)]
pub struct Element {
    sys: Arc<System>,
    inner: Elem,
}

/// A generator subset, given as "s1,s2" or a list of names.
#[derive(FromPyObject)]
pub enum Subset {
    Text(String),
    Names(Vec<String>),
}

/// An element argument: an `Element` or a word to parse.
#[derive(FromPyObject)]
pub enum ElementArg {
    Element(Element),
    Word(String),
}

fn coeffs(p: &IntPolynomial) -> Vec<i64> {
    p.coeffs().to_vec()
}

impl CoxeterSystem {
    fn wrap(&self, inner: Elem) -> Element {
        Element { sys: Arc::clone(&self.sys), inner }
    }

    fn el(&self, arg: ElementArg) -> PyRes<Elem> {
        match arg {
            ElementArg::Element(e) => {
                if !Arc::ptr_eq(&e.sys, &self.sys) && e.sys.matrix() != self.sys.matrix() {
                    return Err(PyValueError::new_err("element belongs to a different Coxeter system"));
                }
                Ok(e.inner)
            }
            ElementArg::Word(w) => self.sys.parse_element(&w).map_err(py_err),
        }
    }

    fn subset(&self, arg: Subset) -> PyRes<GenSet> {
        match arg {
            Subset::Text(t) => self.sys.parse_genset(&t).map_err(py_err),
            Subset::Names(names) => names
                .iter()
                .map(|n| {
                    self.sys
                        .generator_index(n)
                        .ok_or_else(|| py_err(Error::UnknownGenerator(n.clone())))
                })
                .collect(),
        }
    }

    fn names(&self, set: GenSet) -> Vec<String> {
        self.sys.genset_names(set)
    }
}

#[pymethods]
impl CoxeterSystem {
    /// Builds a system from generator names and a Coxeter matrix (0 = infinity).
    #[new]
    fn new(names: Vec<String>, matrix: Vec<Vec<u32>>) -> PyRes<Self> {
        Ok(Self { sys: Arc::new(System::new(names, matrix).map_err(py_err)?) })
    }

    /// A named preset: A3, B3, D4, F4, H3, H4, I2:<m>, ~A<n>.
    #[staticmethod]
    fn from_type(name: &str) -> PyRes<Self> {
        Ok(Self { sys: Arc::new(System::from_type(name).map_err(py_err)?) })
    }

    /// `{"generators": [...], "m": [[...]]}`.
    #[staticmethod]
    fn from_json(text: &str) -> PyRes<Self> {
        Ok(Self { sys: Arc::new(System::from_json(text).map_err(py_err)?) })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.sys.rank()
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.sys.names().to_vec()
    }

    #[getter]
    fn matrix(&self) -> Vec<Vec<u32>> {
        self.sys.matrix().to_vec()
    }

    fn __repr__(&self) -> String {
        format!("CoxeterSystem(generators={:?})", self.sys.names())
    }

    fn identity(&self) -> Element {
        self.wrap(Elem::identity())
    }

    fn element(&self, word: &str) -> PyRes<Element> {
        Ok(self.wrap(self.sys.parse_element(word).map_err(py_err)?))
    }

    /// The element spelled by generator indices.
    fn normalize(&self, word: Vec<usize>) -> PyRes<Element> {
        Ok(self.wrap(self.sys.normalize(&word).map_err(py_err)?))
    }

    fn multiply(&self, a: ElementArg, b: ElementArg) -> PyRes<Element> {
        let (a, b) = (self.el(a)?, self.el(b)?);
        Ok(self.wrap(self.sys.multiply(&a, &b).map_err(py_err)?))
    }

    fn inverse(&self, w: ElementArg) -> PyRes<Element> {
        Ok(self.wrap(self.sys.inverse(&self.el(w)?)))
    }

    /// Demazure (0-Hecke) product.
    fn star(&self, a: ElementArg, b: ElementArg) -> PyRes<Element> {
        let (a, b) = (self.el(a)?, self.el(b)?);
        Ok(self.wrap(self.sys.star(&a, &b).map_err(py_err)?))
    }

    fn left_descents(&self, w: ElementArg) -> PyRes<Vec<String>> {
        Ok(self.names(self.sys.left_descents(&self.el(w)?)))
    }

    fn right_descents(&self, w: ElementArg) -> PyRes<Vec<String>> {
        Ok(self.names(self.sys.right_descents(&self.el(w)?)))
    }

    fn leq(&self, u: ElementArg, w: ElementArg) -> PyRes<bool> {
        Ok(bruhat::leq(&self.sys, &self.el(u)?, &self.el(w)?))
    }

    /// `[e, w]`, ShortLex-sorted.
    fn lower_interval(&self, w: ElementArg) -> PyRes<Vec<Element>> {
        let interval = bruhat::lower_interval(&self.sys, &self.el(w)?).map_err(py_err)?;
        Ok(interval.members.into_iter().map(|m| self.wrap(m)).collect())
    }

    fn covers(&self, w: ElementArg) -> PyRes<Vec<Element>> {
        let cs = bruhat::covers(&self.sys, &self.el(w)?).map_err(py_err)?;
        Ok(cs.into_iter().map(|m| self.wrap(m)).collect())
    }

    /// Coefficients of `P_w`, constant term first.
    fn poincare(&self, w: ElementArg) -> PyRes<Vec<i64>> {
        Ok(coeffs(&bruhat::poincare(&self.sys, &self.el(w)?).map_err(py_err)?))
    }

    fn relative_poincare(&self, w: ElementArg, j: Subset) -> PyRes<Vec<i64>> {
        let (w, j) = (self.el(w)?, self.subset(j)?);
        Ok(coeffs(&poincare::relative_poincare(&self.sys, &w, j).map_err(py_err)?))
    }

    fn coset_rep(&self, w: ElementArg, j: Subset) -> PyRes<Element> {
        let (w, j) = (self.el(w)?, self.subset(j)?);
        Ok(self.wrap(parabolic::coset_rep(&self.sys, &w, j)))
    }

    /// `(v, u)` with `w = v u` (right) or `w = u v` (left).
    #[pyo3(signature = (w, j, side = "right"))]
    fn decompose(&self, w: ElementArg, j: Subset, side: &str) -> PyRes<(Element, Element)> {
        let side = match side {
            "right" => Side::Right,
            "left" => Side::Left,
            other => return Err(PyValueError::new_err(format!("side must be 'right' or 'left', not {other:?}"))),
        };
        let (w, j) = (self.el(w)?, self.subset(j)?);
        let d = parabolic::decompose(&self.sys, &w, j, side);
        Ok((self.wrap(d.v), self.wrap(d.u)))
    }

    /// `[e, w] ∩ W^J`.
    fn min_reps_leq(&self, w: ElementArg, j: Subset) -> PyRes<Vec<Element>> {
        let (w, j) = (self.el(w)?, self.subset(j)?);
        let reps = parabolic::min_reps_leq(&self.sys, &w, j).map_err(py_err)?;
        Ok(reps.into_iter().map(|m| self.wrap(m)).collect())
    }

    /// `(q, m)`: the maximum of `[e, w] ∩ x W_J` and `x⁻¹ q`.
    fn max_in_coset(&self, w: ElementArg, x: ElementArg, j: Subset) -> PyRes<(Element, Element)> {
        let (w, x, j) = (self.el(w)?, self.el(x)?, self.subset(j)?);
        let r = coset_max::max_in_coset(&self.sys, &w, &x, j).map_err(py_err)?;
        Ok((self.wrap(r.q), self.wrap(r.m)))
    }

    fn m_j(&self, w: ElementArg, x: ElementArg, j: Subset) -> PyRes<Element> {
        let (w, x, j) = (self.el(w)?, self.el(x)?, self.subset(j)?);
        Ok(self.wrap(coset_max::m_j(&self.sys, &w, &x, j).map_err(py_err)?))
    }

    /// `[(x, m_J(w, x))]` over `x ∈ [e, w] ∩ W^J`.
    fn shifted_max_set(&self, w: ElementArg, j: Subset) -> PyRes<Vec<(Element, Element)>> {
        let (w, j) = (self.el(w)?, self.subset(j)?);
        let set = coset_max::shifted_max_set(&self.sys, &w, j).map_err(py_err)?;
        Ok(set.pairs.into_iter().map(|(x, m)| (self.wrap(x), self.wrap(m))).collect())
    }

    /// `(q, m)` for the relative coset `[e, w]^J ∩ x W^J_K`.
    fn max_in_relative_coset(
        &self,
        w: ElementArg,
        x: ElementArg,
        j: Subset,
        k: Subset,
    ) -> PyRes<(Element, Element)> {
        let (w, x, j, k) = (self.el(w)?, self.el(x)?, self.subset(j)?, self.subset(k)?);
        let r = coset_max::max_in_relative_coset(&self.sys, &w, &x, j, k).map_err(py_err)?;
        Ok((self.wrap(r.q), self.wrap(r.m)))
    }

    /// Dict with `v`, `u`, `u_max`, `is_bp` and `factorization`.
    fn bp_report<'py>(&self, py: Python<'py>, w: ElementArg, j: Subset) -> PyRes<Bound<'py, pyo3::types::PyDict>> {
        let (w, j) = (self.el(w)?, self.subset(j)?);
        let r = poincare::bp_report(&self.sys, &w, j).map_err(py_err)?;
        let d = pyo3::types::PyDict::new(py);
        d.set_item("v", self.wrap(r.v))?;
        d.set_item("u", self.wrap(r.u))?;
        d.set_item("u_max", self.wrap(r.u_max))?;
        d.set_item("is_bp", r.is_bp)?;
        d.set_item("factorization", r.factorization.map(|(a, b)| (coeffs(&a), coeffs(&b))))?;
        Ok(d)
    }

    /// Dict with `terms` `[(x, shift, m, factor)]`, `total` and `factored`.
    #[pyo3(signature = (w, j, k = None))]
    fn decompose_poincare<'py>(
        &self,
        py: Python<'py>,
        w: ElementArg,
        j: Subset,
        k: Option<Subset>,
    ) -> PyRes<Bound<'py, pyo3::types::PyDict>> {
        let (w, j) = (self.el(w)?, self.subset(j)?);
        let dec = match k {
            Some(k) => poincare::relative_decompose_poincare(&self.sys, &w, j, self.subset(k)?),
            None => poincare::decompose_poincare(&self.sys, &w, j),
        }
        .map_err(py_err)?;
        let terms: Vec<(Element, usize, Element, Vec<i64>)> = dec
            .terms
            .iter()
            .map(|t| (self.wrap(t.x.clone()), t.shift, self.wrap(t.m.clone()), coeffs(&t.factor)))
            .collect();
        let d = pyo3::types::PyDict::new(py);
        d.set_item("terms", terms)?;
        d.set_item("total", coeffs(&dec.total))?;
        d.set_item("factored", dec.factored())?;
        d.set_item("factorization", dec.factorization.map(|(a, b)| (coeffs(&a), coeffs(&b))))?;
        Ok(d)
    }

    /// Graphviz source for the Hasse diagram of `[e, w]`.
    #[pyo3(signature = (w, j = None))]
    fn hasse_dot(&self, w: ElementArg, j: Option<Subset>) -> PyRes<String> {
        let w = self.el(w)?;
        let j = j.map(|j| self.subset(j)).transpose()?;
        let interval = bruhat::lower_interval(&self.sys, &w).map_err(py_err)?;
        Ok(hasse::hasse_dot(&self.sys, &interval, j))
    }

    /// Compares the coset-maximum construction with brute force on every
    /// element up to `max_length`; returns `(triples, failures)`.
    fn verify(&self, py: Python<'_>, max_length: usize) -> PyRes<(usize, Vec<String>)> {
        let sys = Arc::clone(&self.sys);
        let report = py
            .detach(move || {
                let elements = sys.elements_up_to(max_length)?;
                Ok::<_, Error>(oracle::sweep_coset_max(&sys, &elements))
            })
            .map_err(py_err)?;
        Ok((report.triples, report.failures))
    }
}

#[pymethods]
impl Element {
    /// Generator indices of the canonical reduced word.
    #[getter]
    fn word(&self) -> Vec<usize> {
        self.inner.word().to_vec()
    }

    #[getter]
    fn length(&self) -> usize {
        self.inner.length()
    }

    fn __len__(&self) -> usize {
        self.inner.length()
    }

    fn __str__(&self) -> String {
        self.sys.format(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Element('{}')", self.sys.format(&self.inner))
    }

    fn __mul__(&self, other: &Element) -> PyRes<Element> {
        let inner = self.sys.multiply(&self.inner, &other.inner).map_err(py_err)?;
        Ok(Element { sys: Arc::clone(&self.sys), inner })
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    /// ShortLex comparison; use `CoxeterSystem.leq` for Bruhat order.
    fn __richcmp__(&self, other: &Element, op: CompareOp) -> bool {
        op.matches(self.inner.cmp(&other.inner))
    }
}

#[pymodule]
fn coxbruhat(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<CoxeterSystem>()?;
    m.add_class::<Element>()?;
    m.add("INFINITY", coxbruhat_core::INFINITY)?;
    m.add_function(wrap_pyfunction!(type_a, m)?)?;
    Ok(())
}

/// The symmetric group `S_{n+1}` with generators s1..sn.
#[pyfunction]
fn type_a(n: usize) -> CoxeterSystem {
    CoxeterSystem { sys: Arc::new(presets::type_a(n)) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bindings_wrap_the_engine() {
        Python::initialize();
        Python::attach(|py| {
            let a3 = CoxeterSystem::from_type("A3").unwrap();
            let w = a3.element("s1 s2 s3 s2 s1").unwrap();
            let x = a3.element("s2s3").unwrap();
            let (q, m) = a3
                .max_in_coset(ElementArg::Element(w.clone()), ElementArg::Element(x), Subset::Text("s1,s2".into()))
                .unwrap();
            assert_eq!(q.__str__(), "s2s3s2s1");
            assert_eq!(m.__str__(), "s2s1");
            let report = a3.bp_report(py, ElementArg::Element(w), Subset::Names(vec!["s1".into(), "s2".into()])).unwrap();
            assert!(!report.get_item("is_bp").unwrap().unwrap().extract::<bool>().unwrap());
            assert!(a3.element("s9").is_err());
        });
    }
}

//! Coxeter systems and exact element arithmetic.
//!
//! Elements are stored as their ShortLex-least reduced word. Descents are
//! decided in the standard geometric representation: the simple root
//! `alpha_s` is sent by `w` to a negative root exactly when `s` is a right
//! descent of `w`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use crate::coset_max::CosetMaxResult;
use crate::error::{Error, Result};

/// Matrix entry encoding `m(s, t) = infinity`.
pub const INFINITY: u32 = 0;

/// Default cap on the length of any computed element.
pub const DEFAULT_LENGTH_CAP: usize = 64;

/// Default bound on `l(w)` for lower-interval enumeration.
pub const DEFAULT_INTERVAL_BOUND: usize = 24;

const SIGN_TOLERANCE: f64 = 1e-8;

/// Which side of an element a descent or decomposition refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A subset of the generators, stored as a bitmask over generator indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GenSet(u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn from_bits(bits: u64) -> Self {
        GenSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All generators of a system of the given rank.
    pub fn full(rank: usize) -> Self {
        if rank >= 64 {
            GenSet(u64::MAX)
        } else {
            GenSet((1u64 << rank) - 1)
        }
    }

    pub fn singleton(s: usize) -> Self {
        GenSet(1 << s)
    }

    pub fn contains(self, s: usize) -> bool {
        s < 64 && self.0 & (1 << s) != 0
    }

    pub fn insert(&mut self, s: usize) {
        self.0 |= 1 << s;
    }

    pub fn remove(&mut self, s: usize) {
        self.0 &= !(1 << s);
    }

    pub fn union(self, other: GenSet) -> GenSet {
        GenSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    pub fn difference(self, other: GenSet) -> GenSet {
        GenSet(self.0 & !other.0)
    }

    /// Complement inside the generators of a rank-`rank` system.
    pub fn complement(self, rank: usize) -> GenSet {
        GenSet::full(rank).difference(self)
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing index order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |s| bits & (1 << s) != 0)
    }

    /// Every subset of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = GenSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(GenSet(cur))
        })
    }
}

impl FromIterator<usize> for GenSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = GenSet::EMPTY;
        for s in iter {
            set.insert(s);
        }
        set
    }
}

/// A group element, held as its ShortLex-least reduced word.
///
/// Equality, hashing and ordering all go through the canonical word, and the
/// order is ShortLex: shorter words first, then lexicographic by generator
/// index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    word: Vec<usize>,
}

impl Element {
    pub fn identity() -> Self {
        Element { word: Vec::new() }
    }

    /// The canonical reduced word.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// First letter of the canonical word, which is the smallest left descent.
    pub fn first_letter(&self) -> Option<usize> {
        self.word.first().copied()
    }

    /// `s * self` where `s` is the first canonical letter. The tail of a
    /// ShortLex-greedy word is itself canonical.
    pub fn strip_first(&self) -> Element {
        Element {
            word: self.word.get(1..).unwrap_or_default().to_vec(),
        }
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) type CosetKey = (Element, Element, GenSet);

/// A Coxeter system `(W, S)` built from a Coxeter matrix.
///
/// The system is immutable after construction. It carries a memo table for
/// coset maxima that only ever caches pure results.
pub struct CoxeterSystem {
    names: Vec<String>,
    matrix: Vec<Vec<u32>>,
    // pairing[s][t] = 2 B(alpha_s, alpha_t)
    pairing: Vec<Vec<f64>>,
    length_cap: usize,
    interval_bound: usize,
    pub(crate) coset_memo: Mutex<HashMap<CosetKey, CosetMaxResult>>,
}

impl Clone for CoxeterSystem {
    fn clone(&self) -> Self {
        CoxeterSystem {
            names: self.names.clone(),
            matrix: self.matrix.clone(),
            pairing: self.pairing.clone(),
            length_cap: self.length_cap,
            interval_bound: self.interval_bound,
            coset_memo: Mutex::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("names", &self.names)
            .field("matrix", &self.matrix)
            .field("length_cap", &self.length_cap)
            .field("interval_bound", &self.interval_bound)
            .finish()
    }
}

impl CoxeterSystem {
    /// Builds a system from generator names and a Coxeter matrix in which
    /// `0` stands for infinity.
    pub fn new(names: Vec<String>, matrix: Vec<Vec<u32>>) -> Result<Self> {
        let rank = names.len();
        if rank == 0 {
            return Err(Error::InvalidMatrix("at least one generator is required".into()));
        }
        if rank > 64 {
            return Err(Error::InvalidMatrix("at most 64 generators are supported".into()));
        }
        if matrix.len() != rank || matrix.iter().any(|row| row.len() != rank) {
            return Err(Error::InvalidMatrix(format!(
                "matrix must be {rank}x{rank} to match the generator list"
            )));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidMatrix(format!("bad generator name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidMatrix(format!("duplicate generator name {name:?}")));
            }
        }
        for i in 0..rank {
            if matrix[i][i] != 1 {
                return Err(Error::InvalidMatrix(format!("diagonal entry m({i},{i}) must be 1")));
            }
            for j in 0..rank {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::InvalidMatrix(format!("matrix is not symmetric at ({i},{j})")));
                }
                if i != j && matrix[i][j] == 1 {
                    return Err(Error::InvalidMatrix(format!(
                        "off-diagonal entry m({i},{j}) must be at least 2 or 0 for infinity"
                    )));
                }
            }
        }
        let pairing = matrix
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &m)| match m {
                        _ if i == j => 2.0,
                        INFINITY => -2.0,
                        m => -2.0 * (std::f64::consts::PI / m as f64).cos(),
                    })
                    .collect()
            })
            .collect();
        Ok(CoxeterSystem {
            names,
            matrix,
            pairing,
            length_cap: DEFAULT_LENGTH_CAP,
            interval_bound: DEFAULT_INTERVAL_BOUND,
            coset_memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn with_length_cap(mut self, cap: usize) -> Self {
        self.length_cap = cap;
        self
    }

    pub fn with_interval_bound(mut self, bound: usize) -> Self {
        self.interval_bound = bound;
        self
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    /// `m(s, t)`, with `INFINITY` (0) for an infinite order.
    pub fn order(&self, s: usize, t: usize) -> u32 {
        self.matrix[s][t]
    }

    pub fn length_cap(&self) -> usize {
        self.length_cap
    }

    pub fn interval_bound(&self) -> usize {
        self.interval_bound
    }

    /// Drops memoized coset maxima.
    pub fn clear_caches(&self) {
        self.coset_memo.lock().expect("memo lock").clear();
    }

    pub fn all_generators(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    pub fn identity(&self) -> Element {
        Element::identity()
    }

    pub fn generator(&self, s: usize) -> Element {
        assert!(s < self.rank(), "generator index out of range");
        Element { word: vec![s] }
    }

    fn check_word(&self, word: &[usize]) -> Result<()> {
        match word.iter().find(|&&s| s >= self.rank()) {
            Some(&index) => Err(Error::IndexOutOfRange { index, rank: self.rank() }),
            None => Ok(()),
        }
    }

    /// Applies the reflection `sigma_s` to `v` in place. Only coordinate `s`
    /// changes.
    fn reflect(&self, s: usize, v: &mut [f64]) {
        let dot: f64 = self.pairing[s].iter().zip(v.iter()).map(|(c, x)| c * x).sum();
        v[s] -= dot;
    }

    fn is_negative(v: &[f64]) -> bool {
        v.iter().sum::<f64>() < -SIGN_TOLERANCE
    }

    /// The image of `alpha_s` under the group element spelled by `letters`
    /// applied rightmost first.
    fn root_image(&self, letters: &[usize], s: usize) -> Vec<f64> {
        let mut v = vec![0.0; self.rank()];
        v[s] = 1.0;
        for &t in letters.iter().rev() {
            self.reflect(t, &mut v);
        }
        v
    }

    /// Reduces an arbitrary word to its canonical element.
    pub fn normalize(&self, word: &[usize]) -> Result<Element> {
        self.check_word(word)?;
        let rank = self.rank();
        // columns[s] = g^{-1}(alpha_s) where g is the word's element
        let mut columns: Vec<Vec<f64>> = (0..rank)
            .map(|s| {
                let mut v = vec![0.0; rank];
                v[s] = 1.0;
                for &t in word {
                    self.reflect(t, &mut v);
                }
                v
            })
            .collect();
        let mut canonical = Vec::new();
        while let Some(s) = (0..rank).find(|&s| Self::is_negative(&columns[s])) {
            if canonical.len() >= self.length_cap || canonical.len() >= word.len() {
                if canonical.len() >= self.length_cap {
                    return Err(Error::LengthCapExceeded { cap: self.length_cap });
                }
                return Err(Error::InternalAssertionFailed(
                    "normal form longer than its input word; sign tolerance breached".into(),
                ));
            }
            canonical.push(s);
            // g <- s g, so g^{-1} <- g^{-1} sigma_s
            let col_s = columns[s].clone();
            for (j, column) in columns.iter_mut().enumerate() {
                let c = self.pairing[s][j];
                if c != 0.0 {
                    for (x, y) in column.iter_mut().zip(&col_s) {
                        *x -= c * y;
                    }
                }
            }
        }
        Ok(Element { word: canonical })
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        if a.is_identity() {
            return Ok(b.clone());
        }
        if b.is_identity() {
            return Ok(a.clone());
        }
        let word: Vec<usize> = a.word.iter().chain(&b.word).copied().collect();
        self.normalize(&word)
    }

    pub fn inverse(&self, w: &Element) -> Element {
        let reversed: Vec<usize> = w.word.iter().rev().copied().collect();
        self.normalize(&reversed)
            .expect("inverse has the same length as a valid element")
    }

    pub fn is_right_descent(&self, w: &Element, s: usize) -> bool {
        Self::is_negative(&self.root_image(&w.word, s))
    }

    pub fn is_left_descent(&self, w: &Element, s: usize) -> bool {
        if w.first_letter() == Some(s) {
            return true;
        }
        // s is a left descent of w iff w^{-1}(alpha_s) < 0
        let mut v = vec![0.0; self.rank()];
        v[s] = 1.0;
        for &t in &w.word {
            self.reflect(t, &mut v);
        }
        Self::is_negative(&v)
    }

    pub fn descents(&self, w: &Element, side: Side) -> GenSet {
        (0..self.rank())
            .filter(|&s| match side {
                Side::Left => self.is_left_descent(w, s),
                Side::Right => self.is_right_descent(w, s),
            })
            .collect()
    }

    pub fn left_descents(&self, w: &Element) -> GenSet {
        self.descents(w, Side::Left)
    }

    pub fn right_descents(&self, w: &Element) -> GenSet {
        self.descents(w, Side::Right)
    }

    pub fn support(&self, w: &Element) -> GenSet {
        w.word.iter().copied().collect()
    }

    /// `s * w`.
    pub fn left_mul_gen(&self, s: usize, w: &Element) -> Result<Element> {
        if w.first_letter() == Some(s) {
            return Ok(w.strip_first());
        }
        let mut word = Vec::with_capacity(w.length() + 1);
        word.push(s);
        word.extend_from_slice(&w.word);
        self.normalize(&word)
    }

    /// `w * s`.
    pub fn right_mul_gen(&self, w: &Element, s: usize) -> Result<Element> {
        let mut word = w.word.clone();
        word.push(s);
        self.normalize(&word)
    }

    /// The Coxeter-monoid (Demazure) product `a * b`: the letters of `b` are
    /// folded into `a`, absorbing any letter that is already a right descent.
    pub fn star(&self, a: &Element, b: &Element) -> Result<Element> {
        let mut acc = a.clone();
        for &s in &b.word {
            if !self.is_right_descent(&acc, s) {
                acc = self.right_mul_gen(&acc, s)?;
            }
        }
        Ok(acc)
    }

    /// Monoid product of a sequence of generators.
    pub fn star_fold(&self, letters: &[usize]) -> Result<Element> {
        self.check_word(letters)?;
        let mut acc = Element::identity();
        for &s in letters {
            if !self.is_right_descent(&acc, s) {
                acc = self.right_mul_gen(&acc, s)?;
            }
        }
        Ok(acc)
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn is_identity_token(&self, token: &str) -> bool {
        (token == "e" || token == "∅" || token == "1") && self.generator_index(token).is_none()
    }

    /// Parses a word: whitespace-separated generator names, with each token
    /// also allowed to be several names run together (`s1s2s1`). `e` and `∅`
    /// denote the identity.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        let mut word = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == '*' || c == '·') {
            if token.is_empty() || self.is_identity_token(token) {
                continue;
            }
            if let Some(s) = self.generator_index(token) {
                word.push(s);
                continue;
            }
            let mut rest = token;
            while !rest.is_empty() {
                let best = self
                    .names
                    .iter()
                    .enumerate()
                    .filter(|(_, n)| rest.starts_with(n.as_str()))
                    .max_by_key(|(_, n)| n.len());
                match best {
                    Some((s, n)) => {
                        word.push(s);
                        rest = &rest[n.len()..];
                    }
                    None => return Err(Error::UnknownGenerator(token.to_string())),
                }
            }
        }
        Ok(word)
    }

    pub fn parse_element(&self, text: &str) -> Result<Element> {
        self.normalize(&self.parse_word(text)?)
    }

    /// Parses a comma- or whitespace-separated list of generator names.
    /// An empty string, `{}` or `∅` is the empty set.
    pub fn parse_genset(&self, text: &str) -> Result<GenSet> {
        let text = text.trim().trim_start_matches('{').trim_end_matches('}');
        let mut set = GenSet::EMPTY;
        for token in text.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() || token == "∅" {
                continue;
            }
            match self.generator_index(token) {
                Some(s) => set.insert(s),
                None => return Err(Error::UnknownGenerator(token.to_string())),
            }
        }
        Ok(set)
    }

    /// Canonical word with names run together; the identity prints as `e`.
    pub fn format(&self, w: &Element) -> String {
        self.format_word(&w.word)
    }

    pub fn format_word(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter().map(|&s| self.names[s].as_str()).collect()
    }

    pub fn format_genset(&self, set: GenSet) -> String {
        let names: Vec<&str> = set.iter().map(|s| self.names[s].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn genset_names(&self, set: GenSet) -> Vec<String> {
        set.iter().map(|s| self.names[s].clone()).collect()
    }

    /// Every element of length at most `max_len`, in ShortLex order. Built
    /// breadth-first, so it also works for infinite groups.
    pub fn elements_up_to(&self, max_len: usize) -> Result<Vec<Element>> {
        let mut all = vec![Element::identity()];
        let mut layer = vec![Element::identity()];
        for _ in 0..max_len {
            let mut next = std::collections::BTreeSet::new();
            for w in &layer {
                for s in 0..self.rank() {
                    if !self.is_right_descent(w, s) {
                        next.insert(self.right_mul_gen(w, s)?);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            layer = next.into_iter().collect();
            all.extend(layer.iter().cloned());
        }
        Ok(all)
    }

    /// Every element of a finite group, or an error if the group has an
    /// element longer than the length cap.
    pub fn all_elements(&self) -> Result<Vec<Element>> {
        let all = self.elements_up_to(self.length_cap + 1)?;
        if all.last().map_or(0, Element::length) > self.length_cap {
            return Err(Error::LengthCapExceeded { cap: self.length_cap });
        }
        Ok(all)
    }
}

//! Necklaces: the cyclic quotient `A/[A,A]` of the path algebra.
//!
//! Open paths are commutators (`p = e_s·p − p·e_s` when `s ≠ t`), and a
//! closed path equals each of its rotations modulo commutators, so the
//! quotient has a basis of trivial classes `e_v` and cyclic words.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::path::Path;
use crate::quiver::{Arrow, DoubledQuiver, QuiverRef};
use crate::rational::{write_term, Rational};

/// A basis element of `A/[A,A]`.
///
/// Cycles store the rotation whose arrow sequence is lexicographically least
/// in the global arrow order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Necklace {
    Trivial(usize),
    Cycle(Path),
}

impl Necklace {
    /// Canonical class of a closed path.
    pub fn of_closed_path(dq: &DoubledQuiver, path: &Path) -> Result<Self> {
        if !path.is_closed() {
            return Err(Error::OpenPath {
                path: path.display(dq),
                start: path.start() + 1,
                end: path.end() + 1,
            });
        }
        if path.is_trivial() {
            return Ok(Necklace::Trivial(path.start()));
        }
        let offset = least_rotation(path.arrows());
        Ok(Necklace::Cycle(path.rotate(dq, offset)))
    }

    /// Representative path: `e_v` or the canonical rotation.
    pub fn representative(&self) -> Path {
        match self {
            Necklace::Trivial(v) => Path::trivial(*v),
            Necklace::Cycle(p) => p.clone(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Necklace::Trivial(_) => 0,
            Necklace::Cycle(p) => p.len(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, Necklace::Trivial(_))
    }

    fn arrows(&self) -> &[Arrow] {
        match self {
            Necklace::Trivial(_) => &[],
            Necklace::Cycle(p) => p.arrows(),
        }
    }

    pub fn display(&self, dq: &DoubledQuiver) -> String {
        match self {
            Necklace::Trivial(v) => format!("e_{}", v + 1),
            Necklace::Cycle(p) => format!("({})", p.display(dq)),
        }
    }
}

/// Ordered by length, then arrow sequence; trivial classes by vertex.
impl Ord for Necklace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.arrows().cmp(other.arrows()))
            .then_with(|| match (self, other) {
                (Necklace::Trivial(a), Necklace::Trivial(b)) => a.cmp(b),
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for Necklace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Offset of the lexicographically least rotation; the smallest such offset
/// when the word is periodic.
pub fn least_rotation<T: Ord>(word: &[T]) -> usize {
    let n = word.len();
    let mut best = 0;
    for k in 1..n {
        let cand = word[k..].iter().chain(&word[..k]);
        let cur = word[best..].iter().chain(&word[..best]);
        if cand.cmp(cur) == Ordering::Less {
            best = k;
        }
    }
    best
}

/// A finite rational combination of necklaces.
#[derive(Debug, Clone)]
pub struct NecklaceElement {
    quiver: QuiverRef,
    terms: BTreeMap<Necklace, Rational>,
}

impl PartialEq for NecklaceElement {
    fn eq(&self, other: &Self) -> bool {
        self.quiver.same_as(&other.quiver) && self.terms == other.terms
    }
}

impl Eq for NecklaceElement {}

impl NecklaceElement {
    pub fn zero(quiver: &QuiverRef) -> Self {
        Self {
            quiver: quiver.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_necklace(quiver: &QuiverRef, n: Necklace) -> Self {
        let mut x = Self::zero(quiver);
        x.add_term(n, Rational::one());
        x
    }

    /// Image of a single path; open paths give zero.
    pub fn from_path(quiver: &QuiverRef, path: &Path) -> Self {
        match Necklace::of_closed_path(quiver, path) {
            Ok(n) => Self::from_necklace(quiver, n),
            Err(_) => Self::zero(quiver),
        }
    }

    pub fn quiver(&self) -> &QuiverRef {
        &self.quiver
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Necklace, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, n: &Necklace) -> Rational {
        self.terms.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, n: Necklace, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(n.clone()).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&n);
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !self.quiver.same_as(&other.quiver) {
            return Err(Error::MixedQuiver);
        }
        let mut out = self.clone();
        for (n, c) in &other.terms {
            out.add_term(n.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(&self.quiver);
        for (n, d) in &self.terms {
            out.add_term(n.clone(), d * c);
        }
        out
    }

    /// The necklace Lie bracket `⟨self, other⟩`.
    pub fn bracket(&self, other: &Self) -> Self {
        crate::derivation::necklace_bracket(self, other).expect("operands over different quivers")
    }

    /// Lifts back to the path algebra using canonical representatives.
    pub fn to_algebra(&self) -> AlgebraElement {
        AlgebraElement::from_terms(
            &self.quiver,
            self.terms.iter().map(|(n, c)| (n.representative(), c.clone())),
        )
    }
}

impl fmt::Display for NecklaceElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (n, c)) in self.terms.iter().enumerate() {
            write_term(&mut out, i == 0, c, &n.display(&self.quiver));
        }
        f.write_str(&out)
    }
}

impl Add for &NecklaceElement {
    type Output = NecklaceElement;
    fn add(self, rhs: &NecklaceElement) -> NecklaceElement {
        self.try_add(rhs).expect("operands over different quivers")
    }
}

impl Sub for &NecklaceElement {
    type Output = NecklaceElement;
    fn sub(self, rhs: &NecklaceElement) -> NecklaceElement {
        self + &-rhs
    }
}

impl Neg for &NecklaceElement {
    type Output = NecklaceElement;
    fn neg(self) -> NecklaceElement {
        self.scale(&-Rational::one())
    }
}

/// The quotient map `A -> A/[A,A]`.
pub fn project(x: &AlgebraElement) -> NecklaceElement {
    let dq = x.quiver();
    let mut out = NecklaceElement::zero(dq);
    for (p, c) in x.terms() {
        if let Ok(n) = Necklace::of_closed_path(dq, p) {
            out.add_term(n, c.clone());
        }
    }
    out
}

/// All closed paths of exactly `len` arrows, each listed from every start.
pub fn closed_paths(dq: &DoubledQuiver, len: usize) -> Vec<Path> {
    if len == 0 {
        return (0..dq.vertex_count()).map(Path::trivial).collect();
    }
    let mut out = Vec::new();
    let mut stack: Vec<Arrow> = Vec::with_capacity(len);
    for v in 0..dq.vertex_count() {
        walk(dq, v, v, len, &mut stack, &mut out);
    }
    out
}

fn walk(dq: &DoubledQuiver, start: usize, at: usize, len: usize, stack: &mut Vec<Arrow>, out: &mut Vec<Path>) {
    if stack.len() == len {
        if at == start {
            out.push(Path::from_arrows(dq, stack.clone()).expect("walk composes"));
        }
        return;
    }
    for a in dq.arrows_from(at) {
        stack.push(a);
        walk(dq, start, dq.head(a), len, stack, out);
        stack.pop();
    }
}

/// Every necklace with at most `max_len` arrows, sorted.
pub fn enumerate_necklaces(dq: &DoubledQuiver, max_len: usize) -> Vec<Necklace> {
    let mut set = BTreeSet::new();
    for len in 0..=max_len {
        for p in closed_paths(dq, len) {
            set.insert(Necklace::of_closed_path(dq, &p).expect("closed"));
        }
    }
    set.into_iter().collect()
}

//! Elements of the path algebra of a doubled quiver over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::path::Path;
use crate::quiver::QuiverRef;
use crate::rational::{write_term, Rational};

/// A finite rational combination of paths. Zero coefficients are never stored.
#[derive(Debug, Clone)]
pub struct AlgebraElement {
    quiver: QuiverRef,
    terms: BTreeMap<Path, Rational>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.quiver.same_as(&other.quiver) && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

impl AlgebraElement {
    pub fn zero(quiver: &QuiverRef) -> Self {
        Self {
            quiver: quiver.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_path(quiver: &QuiverRef, path: Path) -> Self {
        Self::from_term(quiver, path, Rational::one())
    }

    pub fn from_term(quiver: &QuiverRef, path: Path, coeff: Rational) -> Self {
        let mut x = Self::zero(quiver);
        x.add_term(path, coeff);
        x
    }

    pub fn from_terms(quiver: &QuiverRef, terms: impl IntoIterator<Item = (Path, Rational)>) -> Self {
        let mut x = Self::zero(quiver);
        for (p, c) in terms {
            x.add_term(p, c);
        }
        x
    }

    /// The trivial path `e_v`.
    pub fn vertex(quiver: &QuiverRef, v: usize) -> Self {
        Self::from_path(quiver, Path::trivial(v))
    }

    /// `Σ_v e_v`, the unit.
    pub fn one(quiver: &QuiverRef) -> Self {
        Self::from_terms(
            quiver,
            (0..quiver.vertex_count()).map(|v| (Path::trivial(v), Rational::one())),
        )
    }

    pub fn quiver(&self) -> &QuiverRef {
        &self.quiver
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, path: &Path) -> Rational {
        self.terms.get(path).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, path: Path, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(path) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.quiver.same_as(&other.quiver) {
            Ok(())
        } else {
            Err(Error::MixedQuiver)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Bilinear extension of path concatenation; non-composable pairs give 0.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.quiver);
        for (p, c) in &self.terms {
            for (q, d) in &other.terms {
                if let Some(pq) = p.concat(q) {
                    out.add_term(pq, c * d);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.quiver);
        }
        Self {
            quiver: self.quiver.clone(),
            terms: self.terms.iter().map(|(p, d)| (p.clone(), d * c)).collect(),
        }
    }

    /// `self·other − other·self`.
    pub fn try_commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.try_commutator(other).expect("operands over different quivers")
    }

    /// Elements whose terms all are paths of the given length.
    pub fn is_homogeneous(&self, len: usize) -> bool {
        self.terms.keys().all(|p| p.len() == len)
    }
}

fn display_order<'a>(paths: impl Iterator<Item = &'a Path>) -> Vec<&'a Path> {
    let mut v: Vec<&Path> = paths.collect();
    v.sort_by(|a, b| {
        (a.len(), a.arrows(), a.start()).cmp(&(b.len(), b.arrows(), b.start()))
    });
    v
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, p) in display_order(self.terms.keys()).into_iter().enumerate() {
            let body = if p.is_trivial() {
                p.display(&self.quiver)
            } else {
                format!("({})", p.display(&self.quiver))
            };
            write_term(&mut out, i == 0, &self.terms[p], &body);
        }
        f.write_str(&out)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&AlgebraElement> for &AlgebraElement {
            type Output = AlgebraElement;
            fn $method(self, rhs: &AlgebraElement) -> AlgebraElement {
                self.$try(rhs).expect("operands over different quivers")
            }
        }
        impl $tr for AlgebraElement {
            type Output = AlgebraElement;
            fn $method(self, rhs: AlgebraElement) -> AlgebraElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&-Rational::one())
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        -&self
    }
}

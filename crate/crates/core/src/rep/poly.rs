//! Sparse multivariate polynomials over the rationals in the matrix-entry
//! variables `x(a,i,j)` of the representation scheme.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{Arrow, DoubledQuiver};
use crate::rational::{parse_rational, to_fraction_string, write_term, Rational};

/// Entry `(row, col)` of the matrix of arrow `a`; 0-based, printed 1-based.
///
/// Ordered by arrow, then row, then column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub arrow: Arrow,
    pub row: u16,
    pub col: u16,
}

impl Var {
    pub fn new(arrow: Arrow, row: usize, col: usize) -> Self {
        Self {
            arrow,
            row: row as u16,
            col: col as u16,
        }
    }

    pub fn name(&self, dq: &DoubledQuiver) -> String {
        format!("x({},{},{})", dq.id(self.arrow), self.row + 1, self.col + 1)
    }

    /// Inverse of [`Var::name`].
    pub fn parse(text: &str, dq: &DoubledQuiver) -> Result<Self> {
        let bad = || Error::BadVariable(text.to_string());
        let inner = text
            .trim()
            .strip_prefix("x(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (rest, col) = inner.rsplit_once(',').ok_or_else(bad)?;
        let (id, row) = rest.rsplit_once(',').ok_or_else(bad)?;
        let arrow = dq
            .arrow_by_id(id.trim())
            .ok_or_else(|| Error::UnknownArrow(id.trim().to_string()))?;
        let row: usize = row.trim().parse().map_err(|_| bad())?;
        let col: usize = col.trim().parse().map_err(|_| bad())?;
        if row == 0 || col == 0 {
            return Err(bad());
        }
        Ok(Var::new(arrow, row - 1, col - 1))
    }
}

/// A product of variables, stored as `(var, exponent)` sorted by variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_powers(mut powers: Vec<(Var, u32)>) -> Self {
        powers.retain(|&(_, e)| e > 0);
        powers.sort_by_key(|&(v, _)| v);
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(powers.len());
        for (v, e) in powers {
            match out.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => out.push((v, e)),
            }
        }
        Monomial(out)
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Removes one factor of the variable at `idx`.
    fn drop_one(&self, idx: usize) -> Monomial {
        let mut out = self.0.clone();
        if out[idx].1 == 1 {
            out.remove(idx);
        } else {
            out[idx].1 -= 1;
        }
        Monomial(out)
    }

    pub fn display(&self, dq: &DoubledQuiver) -> String {
        let mut s = String::new();
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                s.push('·');
            }
            s.push_str(&v.name(dq));
            if *e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }
}

/// Degree first, then lexicographic in the variable order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn var(v: Var) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::var(v), Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant term when the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.terms.keys().flat_map(|m| m.0.iter().map(|&(v, _)| v))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Polynomial, c: &Rational) {
        for (m, d) in &other.terms {
            self.add_term(m.clone(), d * c);
        }
    }

    /// `self += a·b` without materialising the product.
    pub fn add_product(&mut self, a: &Polynomial, b: &Polynomial) {
        *self += &product(a, b);
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Extends `image` on variables to the derivation with `D(x) = image(x)`
    /// and `D(fg) = f·D(g) + D(f)·g`. Variables mapped to `None` are constants
    /// for `D`.
    pub fn derive<'a>(&self, mut image: impl FnMut(Var) -> Option<&'a Polynomial>) -> Polynomial {
        // Σ_v (∂f/∂v)·D(v)
        let mut partials: BTreeMap<Var, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            for (idx, &(v, e)) in m.0.iter().enumerate() {
                partials
                    .entry(v)
                    .or_default()
                    .add_term(m.drop_one(idx), c * Rational::from_integer(e.into()));
            }
        }
        let mut out = Polynomial::zero();
        for (v, partial) in partials {
            if let Some(img) = image(v) {
                if !img.is_zero() {
                    out.add_product(&partial, img);
                }
            }
        }
        out
    }

    /// Partial derivative in `v`.
    pub fn partial(&self, v: Var) -> Polynomial {
        let one = Polynomial::one();
        self.derive(|w| (w == v).then_some(&one))
    }

    /// Replaces every variable `v` by `image(v)` and expands.
    pub fn substitute(&self, mut image: impl FnMut(Var) -> Polynomial) -> Polynomial {
        let mut images: BTreeMap<Var, Integral> = BTreeMap::new();
        // Partial products of the previous monomial's leading factors; terms
        // are sorted, so neighbours usually share a prefix.
        let mut stack: Vec<(Var, Integral)> = Vec::new();
        let mut out = IntegralSum::default();
        let one = Integral::one();
        for (m, c) in &self.terms {
            let factors = m.0.iter().flat_map(|&(v, e)| std::iter::repeat_n(v, e as usize));
            let mut depth = 0;
            for v in factors {
                if depth < stack.len() && stack[depth].0 == v {
                    depth += 1;
                    continue;
                }
                stack.truncate(depth);
                let img = images.entry(v).or_insert_with(|| Integral::of(&image(v)));
                let next = stack.last().map_or(&one, |(_, p)| p).mul(img);
                stack.push((v, next));
                depth += 1;
            }
            stack.truncate(depth);
            out.add_scaled(stack.last().map_or(&one, |(_, p)| p), c);
        }
        out.finish()
    }

    /// Leading term first.
    pub fn display(&self, dq: &DoubledQuiver) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            write_term(&mut out, k == 0, c, &m.display(dq));
        }
        out
    }

    pub fn to_json_terms(&self, dq: &DoubledQuiver) -> Vec<PolyTermJson> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| PolyTermJson {
                coeff: to_fraction_string(c),
                monomial: m.0.iter().map(|(v, e)| (v.name(dq), *e)).collect(),
            })
            .collect()
    }

    pub fn to_json(&self, dq: &DoubledQuiver) -> serde_json::Value {
        serde_json::to_value(self.to_json_terms(dq)).expect("plain data serializes")
    }

    pub fn from_json_terms(terms: &[PolyTermJson], dq: &DoubledQuiver) -> Result<Self> {
        let mut out = Polynomial::zero();
        for t in terms {
            let c = parse_rational(&t.coeff)?;
            let powers = t
                .monomial
                .iter()
                .map(|(name, e)| Var::parse(name, dq).map(|v| (v, *e)))
                .collect::<Result<Vec<_>>>()?;
            out.add_term(Monomial::from_powers(powers), c);
        }
        Ok(out)
    }

    pub fn from_json(value: &serde_json::Value, dq: &DoubledQuiver) -> Result<Self> {
        let terms: Vec<PolyTermJson> =
            serde_json::from_value(value.clone()).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_json_terms(&terms, dq)
    }
}

/// Wire form of one polynomial term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTermJson {
    pub coeff: String,
    pub monomial: Vec<(String, u32)>,
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

/// A polynomial as integer numerators over one common denominator; products
/// in this form need no gcd work until converted back.
struct Integral {
    terms: Vec<(Monomial, BigInt)>,
    den: BigInt,
}

impl Integral {
    fn one() -> Self {
        Integral {
            terms: vec![(Monomial::one(), BigInt::one())],
            den: BigInt::one(),
        }
    }

    fn of(p: &Polynomial) -> Self {
        let den = p.terms.values().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let terms = p
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.numer() * (&den / c.denom())))
            .collect();
        Integral { terms, den }
    }

    fn mul(&self, other: &Integral) -> Integral {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                *acc.entry(m.mul(n)).or_default() += c * d;
            }
        }
        Integral {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
            den: &self.den * &other.den,
        }
    }
}

/// Sums of integral polynomials, kept apart by denominator.
#[derive(Default)]
struct IntegralSum(HashMap<BigInt, HashMap<Monomial, BigInt>>);

impl IntegralSum {
    fn add_scaled(&mut self, p: &Integral, c: &Rational) {
        let group = self.0.entry(&p.den * c.denom()).or_default();
        for (m, n) in &p.terms {
            *group.entry(m.clone()).or_default() += n * c.numer();
        }
    }

    fn finish(self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (den, group) in self.0 {
            for (m, n) in group {
                if !n.is_zero() {
                    out.add_term(m, Rational::new(n, den.clone()));
                }
            }
        }
        out
    }
}

fn product(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut sum = IntegralSum::default();
    sum.add_scaled(&Integral::of(a).mul(&Integral::of(b)), &Rational::one());
    sum.finish()
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        product(self, rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

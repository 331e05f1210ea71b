//! Trace expressions and the induced Poisson bracket on the trace algebra.
//!
//! An element of the trace algebra is handled through a chosen presentation
//! `f = Σ λ · tr(a_1)…tr(a_k)`. The bracket
//!
//! ```text
//! {f, g} = Σ λ Σ_i (Π_{j≠i} tr a_j) · ψ_{a_i}(g)
//! ```
//!
//! is evaluated on the expansion of `g` in the coordinate ring, so the result
//! is an honest polynomial and presentation independence can be tested.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::necklace::{Necklace, NecklaceElement};
use crate::quiver::DoubledQuiver;
use crate::rational::{write_term, Rational};
use crate::rep::poly::Polynomial;
use crate::rep::scheme::RepSpace;

/// A formal polynomial in the symbols `tr(p)`, one per necklace.
///
/// Each key is a sorted multiset of necklaces. Trivial necklaces are kept as
/// symbols, so `tr(e_1)·tr(a)` and `α_1·tr(a)` are distinct presentations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TraceExpression {
    terms: BTreeMap<Vec<Necklace>, Rational>,
}

impl TraceExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Vec::new(), c)
    }

    /// `tr(p)`.
    pub fn symbol(p: Necklace) -> Self {
        Self::term(vec![p], Rational::one())
    }

    /// `c · tr(p_1)…tr(p_k)`.
    pub fn term(mut factors: Vec<Necklace>, c: Rational) -> Self {
        factors.sort();
        let mut out = Self::zero();
        out.add_term(factors, c);
        out
    }

    /// `tr` of a linear combination of necklaces.
    pub fn linear(x: &NecklaceElement) -> Self {
        let mut out = Self::zero();
        for (n, c) in x.terms() {
            out.add_term(vec![n.clone()], c.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Necklace], &Rational)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, factors: Vec<Necklace>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(factors.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&factors);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (k, d) in &self.terms {
            out.add_term(k.clone(), d * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            for (l, d) in &other.terms {
                let mut f = k.clone();
                f.extend(l.iter().cloned());
                f.sort();
                out.add_term(f, c * d);
            }
        }
        out
    }

    /// The polynomial this presentation denotes.
    pub fn expand(&self, space: &RepSpace) -> Polynomial {
        let mut cache = HashMap::new();
        self.expand_cached(space, &mut cache)
    }

    fn expand_cached(&self, space: &RepSpace, cache: &mut HashMap<Necklace, Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (k, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for n in k {
                let tr = cache.entry(n.clone()).or_insert_with(|| space.trace_necklace(n));
                t = &t * tr;
            }
            out += &t;
        }
        out
    }

    /// The bracket computed on presentations: Leibniz in both slots and
    /// `{tr a, tr b} = tr⟨ā, b̄⟩` on generators. Needs only the necklace
    /// bracket, not the coordinate ring.
    pub fn bracket(&self, other: &Self, quiver: &crate::quiver::QuiverRef) -> Self {
        let mut out = Self::zero();
        let mut memo: HashMap<(Necklace, Necklace), NecklaceElement> = HashMap::new();
        for (k, c) in &self.terms {
            for (l, d) in &other.terms {
                let cd = c * d;
                for i in 0..k.len() {
                    for j in 0..l.len() {
                        let b = memo
                            .entry((k[i].clone(), l[j].clone()))
                            .or_insert_with(|| crate::derivation::bracket_necklaces(quiver, &k[i], &l[j]));
                        if b.is_zero() {
                            continue;
                        }
                        let rest: Vec<Necklace> = k
                            .iter()
                            .enumerate()
                            .filter(|&(x, _)| x != i)
                            .map(|(_, n)| n.clone())
                            .chain(l.iter().enumerate().filter(|&(y, _)| y != j).map(|(_, n)| n.clone()))
                            .collect();
                        for (n, e) in b.terms() {
                            let mut f = rest.clone();
                            f.push(n.clone());
                            f.sort();
                            out.add_term(f, &cd * e);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn display(&self, dq: &DoubledQuiver) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            let body: Vec<String> = k
                .iter()
                .map(|n| match n {
                    Necklace::Trivial(_) => format!("tr({})", n.display(dq)),
                    Necklace::Cycle(p) => format!("tr({})", p.display(dq)),
                })
                .collect();
            write_term(&mut out, idx == 0, c, &body.join("·"));
        }
        out
    }
}

/// `{f, G}` for a presented `f` and any polynomial `G`, following the
/// defining formula term by term.
pub fn bracket_with_polynomial(space: &RepSpace, f: &TraceExpression, g: &Polynomial) -> Polynomial {
    let mut traces: HashMap<Necklace, Polynomial> = HashMap::new();
    let mut lifted: HashMap<Necklace, Polynomial> = HashMap::new();
    let mut out = Polynomial::zero();
    for (k, c) in f.terms() {
        for i in 0..k.len() {
            let psi_g = lifted
                .entry(k[i].clone())
                .or_insert_with(|| space.lift(&k[i]).apply(g))
                .clone();
            if psi_g.is_zero() {
                continue;
            }
            let mut cofactor = Polynomial::constant(c.clone());
            for (j, n) in k.iter().enumerate() {
                if j != i {
                    let tr = traces.entry(n.clone()).or_insert_with(|| space.trace_necklace(n));
                    cofactor = &cofactor * tr;
                }
            }
            out.add_product(&cofactor, &psi_g);
        }
    }
    out
}

/// `{f, g}` on the trace algebra, returned as a coordinate-ring polynomial.
pub fn poisson_bracket(space: &RepSpace, f: &TraceExpression, g: &TraceExpression) -> Polynomial {
    bracket_with_polynomial(space, f, &g.expand(space))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::{parse_path, parse_quiver};
    use crate::rational::{int, ratio};
    use crate::rep::dimension::DimensionVector;

    fn neck(s: &RepSpace, p: &str) -> Necklace {
        Necklace::of_closed_path(s.quiver(), &parse_path(p, s.quiver()).unwrap()).unwrap()
    }

    fn tr(s: &RepSpace, p: &str) -> TraceExpression {
        TraceExpression::symbol(neck(s, p))
    }

    fn loop_space(n: usize) -> RepSpace {
        RepSpace::new(
            &parse_quiver("vertices 1; arrows a: 1 -> 1;").unwrap(),
            DimensionVector::new(vec![n]),
        )
        .unwrap()
    }

    #[test]
    fn loop_closed_form() {
        for n in 1..=3 {
            let s = loop_space(n);
            let b = poisson_bracket(&s, &tr(&s, "a"), &tr(&s, "a*"));
            assert_eq!(b.as_constant(), Some(int(-(n as i64))));
        }
    }

    #[test]
    fn skew_on_self() {
        let s = loop_space(2);
        let f = tr(&s, "a a*").mul(&tr(&s, "a")).add(&tr(&s, "a* a*").scale(&ratio(1, 2)));
        assert!(poisson_bracket(&s, &f, &f).is_zero());
    }

    #[test]
    fn presentation_independence_with_trivial_symbol() {
        let s = RepSpace::new(
            &parse_quiver("vertices 2; arrows a: 1 -> 2, b: 2 -> 2;").unwrap(),
            DimensionVector::new(vec![1, 2]),
        )
        .unwrap();
        let g = tr(&s, "b b* b");
        let f1 = tr(&s, "a b a*").mul(&tr(&s, "e_2"));
        let f2 = tr(&s, "a b a*").scale(&int(2));
        assert_eq!(f1.expand(&s), f2.expand(&s));
        assert_eq!(poisson_bracket(&s, &f1, &g), poisson_bracket(&s, &f2, &g));
    }

    #[test]
    fn presentation_independence_cayley_hamilton() {
        // 2x2: tr(a^3) = 3/2 tr(a) tr(a^2) − 1/2 tr(a)^3
        let s = loop_space(2);
        let f1 = tr(&s, "a a a");
        let f2 = tr(&s, "a")
            .mul(&tr(&s, "a a"))
            .scale(&ratio(3, 2))
            .add(&tr(&s, "a").mul(&tr(&s, "a")).mul(&tr(&s, "a")).scale(&ratio(-1, 2)));
        assert_eq!(f1.expand(&s), f2.expand(&s));
        assert_ne!(f1, f2);
        for g in ["a*", "a a* a*", "a* a*"] {
            let g = tr(&s, g);
            assert_eq!(poisson_bracket(&s, &f1, &g), poisson_bracket(&s, &f2, &g));
            assert_eq!(poisson_bracket(&s, &g, &f1), poisson_bracket(&s, &g, &f2));
        }
    }

    #[test]
    fn symbolic_and_polynomial_routes_agree() {
        let s = loop_space(2);
        let f = tr(&s, "a").mul(&tr(&s, "a a*"));
        let g = tr(&s, "a*").mul(&tr(&s, "a* a*")).add(&tr(&s, "e_1"));
        let sym = f.bracket(&g, s.quiver()).expand(&s);
        assert_eq!(sym, poisson_bracket(&s, &f, &g));
    }

    #[test]
    fn display() {
        let s = loop_space(1);
        let f = tr(&s, "a* a").mul(&tr(&s, "e_1")).add(&TraceExpression::constant(int(-2)));
        assert_eq!(f.display(s.quiver()), "−2 + 1·tr(e_1)·tr(a a*)");
    }
}

//! The moment element and the deformed preprojective relation.

use num_traits::{One, Zero};

use crate::algebra::AlgebraElement;
use crate::derivation::derivation_apply;
use crate::error::{Error, Result};
use crate::necklace::Necklace;
use crate::path::Path;
use crate::quiver::QuiverRef;
use crate::rational::{parse_rational_list, Rational};

/// `λ = (λ_1, …, λ_m)`, identified with `Σ_v λ_v e_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn zero(m: usize) -> Self {
        Weight(vec![Rational::zero(); m])
    }

    /// Parses `1,-1/2`.
    pub fn parse(text: &str) -> Result<Self> {
        parse_rational_list(text).map(Weight)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_element(&self, quiver: &QuiverRef) -> Result<AlgebraElement> {
        if self.len() != quiver.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: quiver.vertex_count(),
                actual: self.len(),
            });
        }
        Ok(AlgebraElement::from_terms(
            quiver,
            self.0.iter().enumerate().map(|(v, l)| (Path::trivial(v), l.clone())),
        ))
    }
}

/// `w = Σ_{a ∈ Q̄} ε(a) a a*`.
pub fn moment_element(quiver: &QuiverRef) -> AlgebraElement {
    let dq = &**quiver;
    AlgebraElement::from_terms(
        quiver,
        dq.arrows().map(|a| {
            let path = Path::from_arrows(dq, vec![a, dq.star(a)]).expect("a a* composes");
            (path, Rational::from_integer(dq.sign(a).into()))
        }),
    )
}

/// `w = Σ_{a ∈ Q} [a, a*]`, computed with the algebra product.
pub fn moment_element_commutators(quiver: &QuiverRef) -> AlgebraElement {
    let dq = &**quiver;
    dq.base_arrows().fold(AlgebraElement::zero(quiver), |acc, a| {
        let x = AlgebraElement::from_path(quiver, Path::arrow(dq, a));
        let y = AlgebraElement::from_path(quiver, Path::arrow(dq, dq.star(a)));
        &acc + &x.commutator(&y)
    })
}

/// `w − λ`.
pub fn deformed_relation(quiver: &QuiverRef, lambda: &Weight) -> Result<AlgebraElement> {
    Ok(&moment_element(quiver) - &lambda.to_element(quiver)?)
}

/// `d_p(w − λ)`. Zero for every necklace `p`, which is what makes `d_p`
/// preserve the ideal generated by `w − λ`.
pub fn check_moment_invariance(
    p: &Necklace,
    quiver: &QuiverRef,
    lambda: &Weight,
) -> Result<AlgebraElement> {
    Ok(derivation_apply(p, &deformed_relation(quiver, lambda)?))
}

/// The two sums that cancel in `d_p(w)`: `Σ_j p_>j p_<j p_j` and
/// `Σ_j p_j p_>j p_<j`, for a closed representative `p`.
pub fn moment_cancellation_sums(quiver: &QuiverRef, p: &Path) -> (AlgebraElement, AlgebraElement) {
    let dq = &**quiver;
    let mut first = AlgebraElement::zero(quiver);
    let mut second = AlgebraElement::zero(quiver);
    for j in 0..p.len() {
        let pj = p.slice(dq, j, j + 1);
        let after = p.slice(dq, j + 1, p.len());
        let before = p.slice(dq, 0, j);
        let chain = |parts: [&Path; 3]| {
            parts[0]
                .concat(parts[1])
                .and_then(|t| t.concat(parts[2]))
        };
        if let Some(t) = chain([&after, &before, &pj]) {
            first.add_term(t, Rational::one());
        }
        if let Some(t) = chain([&pj, &after, &before]) {
            second.add_term(t, Rational::one());
        }
    }
    (first, second)
}

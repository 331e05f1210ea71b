//! The necklace derivations `d_p` and the necklace Lie bracket.
//!
//! For paths `p` and `q`,
//!
//! ```text
//! d_p(q) = Σ_i Σ_j ε(q_i) [q_i* = p_j] · q_<i · p_>j · p_<j · q_>i
//! ```
//!
//! Each summand replaces the arrow `q_i` by the rotation of `p` that walks
//! from `head(p_j)` around to `tail(p_j)`. When `p` is open the middle
//! junction `p_>j · p_<j` may fail to compose; such summands are zero.

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::necklace::{project, Necklace, NecklaceElement};
use crate::path::Path;
use crate::quiver::QuiverRef;
use crate::rational::Rational;

/// Evaluates the double sum defining `d_p(q)` for single paths.
pub fn derivation_dp(quiver: &QuiverRef, p: &Path, q: &Path) -> AlgebraElement {
    let dq = &**quiver;
    let mut out = AlgebraElement::zero(quiver);
    for (i, &qi) in q.arrows().iter().enumerate() {
        let target = dq.star(qi);
        for (j, &pj) in p.arrows().iter().enumerate() {
            if pj != target {
                continue;
            }
            let left = q.slice(dq, 0, i);
            let after = p.slice(dq, j + 1, p.len());
            let before = p.slice(dq, 0, j);
            let right = q.slice(dq, i + 1, q.len());
            let term = left
                .concat(&after)
                .and_then(|t| t.concat(&before))
                .and_then(|t| t.concat(&right));
            if let Some(t) = term {
                out.add_term(t, Rational::from_integer(dq.sign(qi).into()));
            }
        }
    }
    out
}

/// `d_p` applied linearly to `x`, using the canonical representative of `p`.
pub fn derivation_apply(p: &Necklace, x: &AlgebraElement) -> AlgebraElement {
    let quiver = x.quiver();
    let rep = p.representative();
    let mut out = AlgebraElement::zero(quiver);
    if rep.is_trivial() {
        return out;
    }
    for (q, c) in x.terms() {
        for (t, d) in derivation_dp(quiver, &rep, q).terms() {
            out.add_term(t.clone(), c * d);
        }
    }
    out
}

/// `⟨x, y⟩`, the bilinear extension of `⟨p̄, q̄⟩ = project(d_p(q))`.
pub fn necklace_bracket(x: &NecklaceElement, y: &NecklaceElement) -> Result<NecklaceElement> {
    let quiver: &QuiverRef = x.quiver();
    if !quiver.same_as(y.quiver()) {
        return Err(Error::MixedQuiver);
    }
    let mut out = NecklaceElement::zero(quiver);
    for (p, c) in x.terms() {
        if p.is_trivial() {
            continue;
        }
        let rep = p.representative();
        for (q, d) in y.terms() {
            if q.is_trivial() {
                continue;
            }
            let cd = c * d;
            for (n, e) in project(&derivation_dp(quiver, &rep, &q.representative())).terms() {
                out.add_term(n.clone(), &cd * e);
            }
        }
    }
    Ok(out)
}

/// Bracket of two single necklaces.
pub fn bracket_necklaces(quiver: &QuiverRef, p: &Necklace, q: &Necklace) -> NecklaceElement {
    if p.is_trivial() || q.is_trivial() {
        return NecklaceElement::zero(quiver);
    }
    project(&derivation_dp(quiver, &p.representative(), &q.representative()))
}

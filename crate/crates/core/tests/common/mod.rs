//! Shared fixtures and independent oracles for the integration suites.
#![allow(dead_code)]

use necklace_core::rep::{Polynomial, RepSpace, Var};
use necklace_core::{parse_quiver, AlgebraElement, Path, QuiverRef, Rational};

pub const LOOP: &str = "vertices 1; arrows a: 1 -> 1;";
pub const A2: &str = "vertices 2; arrows a: 1 -> 2;";
pub const A3: &str = "vertices 3; arrows a: 1 -> 2, b: 2 -> 3;";
/// Two vertices, two base arrows, one of them a loop.
pub const TWO_TWO: &str = "vertices 2; arrows a: 1 -> 2, b: 2 -> 2;";

pub fn quiver(text: &str) -> QuiverRef {
    parse_quiver(text).unwrap()
}

/// Follows `choices` (each taken modulo the out-degree) from `start`,
/// stopping early at a sink.
pub fn walk_from_choices(q: &QuiverRef, start: usize, choices: &[usize]) -> Path {
    let start = start % q.vertex_count();
    let mut arrows = Vec::new();
    let mut at = start;
    for &c in choices {
        let out: Vec<_> = q.arrows_from(at).collect();
        if out.is_empty() {
            break;
        }
        let a = out[c % out.len()];
        arrows.push(a);
        at = q.head(a);
    }
    if arrows.is_empty() {
        Path::trivial(start)
    } else {
        Path::from_arrows(q, arrows).unwrap()
    }
}

/// Closes a walk by rotating to the first revisit of its start, if any.
pub fn closed_from_choices(q: &QuiverRef, start: usize, choices: &[usize]) -> Option<Path> {
    let p = walk_from_choices(q, start, choices);
    (1..=p.len())
        .rev()
        .map(|k| p.slice(q, 0, k))
        .find(|s| s.is_closed())
}

/// Oracle for `d_p` on one arrow: `ε(b) Σ_{j : p_j = b*}` of the rotation of
/// `p` that starts right after position `j`, with its last arrow removed.
pub fn arrow_derivation_oracle(q: &QuiverRef, p: &Path, b: necklace_core::Arrow) -> AlgebraElement {
    let mut out = AlgebraElement::zero(q);
    let sign = if q.data(b).sign > 0 { 1 } else { -1 };
    for (j, &pj) in p.arrows().iter().enumerate() {
        if pj != q.star(b) {
            continue;
        }
        let rot = p.rotate(q, j + 1);
        let body = rot.slice(q, 0, rot.len() - 1);
        out.add_term(body, Rational::from_integer(sign.into()));
    }
    out
}

/// Oracle for `d_p(q)`: Leibniz expansion `Σ_i q_<i · d_p(q_i) · q_>i` using
/// the algebra product and the arrow oracle.
pub fn derivation_oracle(quiv: &QuiverRef, p: &Path, q: &Path) -> AlgebraElement {
    let mut out = AlgebraElement::zero(quiv);
    for i in 0..q.len() {
        let left = AlgebraElement::from_path(quiv, q.slice(quiv, 0, i));
        let right = AlgebraElement::from_path(quiv, q.slice(quiv, i + 1, q.len()));
        let mid = arrow_derivation_oracle(quiv, p, q.arrows()[i]);
        out = &out + &(&(&left * &mid) * &right);
    }
    out
}

/// The constant bivector `{x(c,k,l), x(b,i,j)} = ε(b)·[c = b*]·δ_li·δ_kj`.
fn bivector(q: &QuiverRef, x: Var, y: Var) -> i64 {
    if x.arrow != q.star(y.arrow) || x.col != y.row || x.row != y.col {
        return 0;
    }
    q.data(y.arrow).sign as i64
}

/// Oracle for the Poisson bracket on the coordinate ring:
/// `{f, g} = Σ_{x,y} ∂f/∂x · ∂g/∂y · {x, y}`.
pub fn bivector_bracket(space: &RepSpace, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let q = space.quiver();
    let vars = space.variables();
    let df: Vec<(Var, Polynomial)> = vars
        .iter()
        .map(|&v| (v, f.partial(v)))
        .filter(|(_, p)| !p.is_zero())
        .collect();
    let dg: Vec<(Var, Polynomial)> = vars
        .iter()
        .map(|&v| (v, g.partial(v)))
        .filter(|(_, p)| !p.is_zero())
        .collect();
    let mut out = Polynomial::zero();
    for (x, fx) in &df {
        for (y, gy) in &dg {
            let c = bivector(q, *x, *y);
            if c != 0 {
                out.add_assign_scaled(&(fx * gy), &Rational::from_integer(c.into()));
            }
        }
    }
    out
}

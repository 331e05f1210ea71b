//! Worked examples checked against independent oracles, with the oracle
//! values frozen.

mod common;

use common::*;
use necklace_core::rational::int;
use necklace_core::rep::{bracket_with_polynomial, DimensionVector, RepSpace, TraceExpression};
use necklace_core::{
    derivation_apply, derivation_dp, lift_derivation, parse_path, poisson_bracket, project, AlgebraElement,
    Necklace, NecklaceElement,
};

fn el(q: &necklace_core::QuiverRef, s: &str) -> AlgebraElement {
    AlgebraElement::from_path(q, parse_path(s, q).unwrap())
}

#[test]
fn d_p_examples_match_leibniz_oracle() {
    let q = quiver(LOOP);
    let cases = [
        ("a", "a*", el(&q, "e_1").scale(&int(-1))),
        ("a", "a", AlgebraElement::zero(&q)),
        ("a a*", "a", el(&q, "a")),
        ("a", "a a*", el(&q, "a").scale(&int(-1))),
    ];
    for (p, x, frozen) in cases {
        let (pp, xp) = (parse_path(p, &q).unwrap(), parse_path(x, &q).unwrap());
        let oracle = derivation_oracle(&q, &pp, &xp);
        assert_eq!(oracle, frozen, "oracle for d_{p}({x})");
        assert_eq!(derivation_dp(&q, &pp, &xp), frozen, "d_{p}({x})");
    }
}

#[test]
fn open_arrow_is_a_commutator() {
    let q = quiver(A2);
    let a = el(&q, "a");
    let comm = &(&el(&q, "e_1") * &a) - &(&a * &el(&q, "e_1"));
    assert_eq!(comm, a);
    assert!(project(&a).is_zero());
}

#[test]
fn loop_bracket_value() {
    let q = quiver(LOOP);
    let x = NecklaceElement::from_path(&q, &parse_path("a", &q).unwrap());
    let y = NecklaceElement::from_path(&q, &parse_path("a*", &q).unwrap());
    // project(d_a(a*)) with d_a(a*) = −e_1 from the oracle above
    let oracle = project(&derivation_oracle(&q, &parse_path("a", &q).unwrap(), &parse_path("a*", &q).unwrap()));
    assert_eq!(x.bracket(&y), oracle);
    assert_eq!(oracle.to_string(), "−1·e_1");
}

#[test]
fn moment_invariance_for_single_arrow() {
    let q = quiver(LOOP);
    let a = Necklace::of_closed_path(&q, &parse_path("a", &q).unwrap()).unwrap();
    // d_a(a) = 0, d_a(a*) = −e_1, so d_a(a a* − a* a) = a·(−e_1) − (−e_1)·a = 0
    let da = derivation_oracle(&q, &parse_path("a", &q).unwrap(), &parse_path("a", &q).unwrap());
    let das = derivation_oracle(&q, &parse_path("a", &q).unwrap(), &parse_path("a*", &q).unwrap());
    let oracle = &(&(&(&da * &el(&q, "a*")) + &(&el(&q, "a") * &das)) - &(&das * &el(&q, "a"))) - &(&el(&q, "a*") * &da);
    assert!(oracle.is_zero());
    let w = necklace_core::moment_element(&q);
    assert!(derivation_apply(&a, &w).is_zero());
}

#[test]
fn generic_matrix_block_for_a2() {
    let q = quiver(A2);
    let s = RepSpace::new(&q, DimensionVector::new(vec![1, 2])).unwrap();
    let a = q.arrow_by_id("a").unwrap();
    // Δ^v gives vertex 1 index {1}, vertex 2 indices {2,3}; a: 1 -> 2 maps the
    // vertex-1 block into the vertex-2 block.
    let vars: Vec<String> = s.variables().into_iter().filter(|v| v.arrow == a).map(|v| v.name(&q)).collect();
    assert_eq!(vars, ["x(a,2,1)", "x(a,3,1)"]);
}

#[test]
fn trace_of_idempotent_is_block_size() {
    let q = quiver(A3);
    let s = RepSpace::new(&q, DimensionVector::new(vec![2, 0, 3])).unwrap();
    for (v, size) in [(1usize, 2i64), (2, 0), (3, 3)] {
        let t = s.trace(&el(&q, &format!("e_{v}"))).unwrap();
        assert_eq!(t.as_constant(), Some(int(size)));
    }
}

#[test]
fn lifted_derivation_on_trace_of_reverse_arrow() {
    let q = quiver(LOOP);
    let s = RepSpace::new(&q, DimensionVector::new(vec![1])).unwrap();
    let a = Necklace::of_closed_path(&q, &parse_path("a", &q).unwrap()).unwrap();
    let tr_star = s.trace(&el(&q, "a*")).unwrap();
    assert_eq!(lift_derivation(&s, &a, &tr_star).as_constant(), Some(int(-1)));
    let tr_a = s.trace(&el(&q, "a")).unwrap();
    assert_eq!(bivector_bracket(&s, &tr_a, &tr_star).as_constant(), Some(int(-1)));
}

#[test]
fn loop_poisson_closed_form_matches_bivector_oracle() {
    let q = quiver(LOOP);
    for n in 1..=3usize {
        let s = RepSpace::new(&q, DimensionVector::new(vec![n])).unwrap();
        let a = Necklace::of_closed_path(&q, &parse_path("a", &q).unwrap()).unwrap();
        let b = Necklace::of_closed_path(&q, &parse_path("a*", &q).unwrap()).unwrap();
        let lhs = poisson_bracket(&s, &TraceExpression::symbol(a.clone()), &TraceExpression::symbol(b.clone()));
        let oracle = bivector_bracket(&s, &s.trace_necklace(&a), &s.trace_necklace(&b));
        assert_eq!(oracle.as_constant(), Some(int(-(n as i64))));
        assert_eq!(lhs, oracle);
    }
}

#[test]
fn bracket_with_polynomial_matches_bivector_oracle_on_products() {
    let q = quiver(TWO_TWO);
    let s = RepSpace::new(&q, DimensionVector::new(vec![1, 2])).unwrap();
    let n = |p: &str| Necklace::of_closed_path(&q, &parse_path(p, &q).unwrap()).unwrap();
    let f = TraceExpression::term(vec![n("b"), n("a b a*")], int(2));
    let g = &s.trace_necklace(&n("b* b*")) * &s.trace_necklace(&n("a* a"));
    let lhs = bracket_with_polynomial(&s, &f, &g);
    assert_eq!(lhs, bivector_bracket(&s, &f.expand(&s), &g));
    assert!(!lhs.is_zero());
}

//! Seeded generators for randomized checks.

use num_traits::Zero;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::AlgebraElement;
use crate::necklace::Necklace;
use crate::path::Path;
use crate::quiver::{DoubledQuiver, QuiverRef};
use crate::rational::{ratio, Rational};
use crate::rep::{DimensionVector, RatMatrix};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero rational `num/den` with `|num| ≤ 5`, `1 ≤ den ≤ 3`.
pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let num = rng.random_range(-5..=5);
        if num != 0 {
            return ratio(num, rng.random_range(1..=3));
        }
    }
}

/// A random walk of `len` arrows from a random vertex; `None` if it gets
/// stuck at a sink.
pub fn walk<R: Rng>(dq: &DoubledQuiver, len: usize, rng: &mut R) -> Option<Path> {
    let start = rng.random_range(0..dq.vertex_count());
    if len == 0 {
        return Some(Path::trivial(start));
    }
    let mut at = start;
    let mut arrows = Vec::with_capacity(len);
    for _ in 0..len {
        let out: Vec<_> = dq.arrows_from(at).collect();
        let &a = out.choose(rng)?;
        arrows.push(a);
        at = dq.head(a);
    }
    Path::from_arrows(dq, arrows).ok()
}

/// A random path with `min_len..=max_len` arrows.
pub fn path<R: Rng>(dq: &DoubledQuiver, min_len: usize, max_len: usize, rng: &mut R) -> Path {
    loop {
        let len = rng.random_range(min_len..=max_len);
        if let Some(p) = walk(dq, len, rng) {
            return p;
        }
    }
}

/// A random closed path with `1..=max_len` arrows. Needs at least one arrow
/// in the quiver.
pub fn closed_path<R: Rng>(dq: &DoubledQuiver, max_len: usize, rng: &mut R) -> Path {
    assert!(dq.arrow_count() > 0 && max_len > 0);
    loop {
        let p = path(dq, 1, max_len, rng);
        if p.is_closed() {
            return p;
        }
    }
}

pub fn necklace<R: Rng>(pool: &[Necklace], rng: &mut R) -> Necklace {
    pool.choose(rng).expect("nonempty pool").clone()
}

/// A combination of up to `terms` random paths of length `≤ max_len`.
pub fn element<R: Rng>(quiver: &QuiverRef, terms: usize, max_len: usize, rng: &mut R) -> AlgebraElement {
    let k = rng.random_range(1..=terms.max(1));
    let mut x = AlgebraElement::zero(quiver);
    for _ in 0..k {
        let p = path(quiver, 0, max_len, rng);
        x.add_term(p, rational(rng));
    }
    x
}

/// A block diagonal rational matrix with integer entries in `[-3, 3]`, each
/// block redrawn until invertible.
pub fn gl_element<R: Rng>(alpha: &DimensionVector, rng: &mut R) -> RatMatrix {
    let n = alpha.total();
    let mut g = RatMatrix::zero(n);
    for v in 0..alpha.vertex_count() {
        let block = alpha.block(v);
        if block.is_empty() {
            continue;
        }
        loop {
            for i in block.clone() {
                for j in block.clone() {
                    g.set(i, j, ratio(rng.random_range(-3..=3), 1));
                }
            }
            if !g.principal(block.clone()).determinant().is_zero() {
                break;
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_quiver;

    #[test]
    fn seeded_and_valid() {
        let q = parse_quiver("vertices 2; arrows a: 1 -> 2, b: 2 -> 2;").unwrap();
        let mut r1 = rng(7);
        let mut r2 = rng(7);
        for _ in 0..50 {
            let p = path(&q, 0, 5, &mut r1);
            assert_eq!(p, path(&q, 0, 5, &mut r2));
            assert!(p.len() <= 5);
            let c = closed_path(&q, 4, &mut r1);
            closed_path(&q, 4, &mut r2);
            assert!(c.is_closed() && c.len() >= 1);
        }
        let alpha = DimensionVector::new(vec![1, 2]);
        let g = gl_element(&alpha, &mut r1);
        assert!(g.off_block_entry(&alpha).is_none());
        assert!(!g.determinant().is_zero());
    }

    #[test]
    fn walk_stops_at_sinks() {
        let q = parse_quiver("vertices 2; arrows ;").unwrap();
        let mut r = rng(1);
        assert!(walk(&q, 1, &mut r).is_none());
        assert!(walk(&q, 0, &mut r).is_some());
    }
}

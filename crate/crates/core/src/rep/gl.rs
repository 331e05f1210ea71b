//! The `GL(α)` action `g.x_ij = Σ_k Σ_l g_ik (g⁻¹)_lj x_kl` on coordinates.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rep::matrix::RatMatrix;
use crate::rep::poly::{Polynomial, Var};
use crate::rep::scheme::RepSpace;

/// Checks shape, block structure and invertibility of `g`, returning `g⁻¹`.
pub fn validate_group_element(space: &RepSpace, g: &RatMatrix) -> Result<RatMatrix> {
    let alpha = space.alpha();
    if g.size() != alpha.total() {
        return Err(Error::MatrixSize {
            expected: alpha.total(),
            actual: g.size(),
        });
    }
    if let Some((i, j)) = g.off_block_entry(alpha) {
        return Err(Error::NotBlockDiagonal {
            row: i + 1,
            column: j + 1,
        });
    }
    for v in 0..alpha.vertex_count() {
        let block = alpha.block(v);
        if !block.is_empty() && g.principal(block).determinant().is_zero() {
            return Err(Error::SingularBlock { vertex: v + 1 });
        }
    }
    Ok(g.inverse().expect("blocks are invertible"))
}

/// Substitutes `x(a,i,j) ↦ (g·M(a)·g⁻¹)_ij` in `f` and expands.
pub fn gl_transform(space: &RepSpace, g: &RatMatrix, f: &Polynomial) -> Result<Polynomial> {
    let g_inv = validate_group_element(space, g)?;
    let dq = space.quiver();
    let alpha = space.alpha();
    Ok(f.substitute(|v: Var| {
        let rows = alpha.block(dq.head(v.arrow));
        let cols = alpha.block(dq.tail(v.arrow));
        let mut out = Polynomial::zero();
        for k in rows {
            let gik = g.get(v.row as usize, k);
            if gik.is_zero() {
                continue;
            }
            for l in cols.clone() {
                let glj = g_inv.get(l, v.col as usize);
                if glj.is_zero() {
                    continue;
                }
                out.add_term(
                    crate::rep::poly::Monomial::var(Var::new(v.arrow, k, l)),
                    gik * glj,
                );
            }
        }
        out
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraElement;
    use crate::dsl::{parse_path, parse_quiver};
    use crate::rational::int;
    use crate::rep::dimension::DimensionVector;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    fn space(q: &str, alpha: &[usize]) -> RepSpace {
        RepSpace::new(&parse_quiver(q).unwrap(), DimensionVector::new(alpha.to_vec())).unwrap()
    }

    #[test]
    fn identity_acts_trivially() {
        let s = space("vertices 1; arrows a: 1 -> 1;", &[2]);
        let x = AlgebraElement::from_path(s.quiver(), parse_path("a a* a", s.quiver()).unwrap());
        let f = &s.evaluate(&x).unwrap().get(0, 1).clone() + &s.trace(&x).unwrap();
        assert_eq!(gl_transform(&s, &RatMatrix::identity(2), &f).unwrap(), f);
    }

    #[test]
    fn scalar_block_fixes_loop_coordinates() {
        let s = space("vertices 1; arrows a: 1 -> 1;", &[1]);
        let a = s.quiver().arrow_by_id("a").unwrap();
        let x = Polynomial::var(Var::new(a, 0, 0));
        assert_eq!(gl_transform(&s, &m(&[&[5]]), &x).unwrap(), x);
    }

    #[test]
    fn conjugation_moves_entries_but_not_traces() {
        let s = space("vertices 2; arrows a: 1 -> 2, b: 2 -> 2;", &[1, 2]);
        let g = m(&[&[2, 0, 0], &[0, 1, 1], &[0, 0, 1]]);
        let b = s.quiver().arrow_by_id("b").unwrap();
        let x = Polynomial::var(Var::new(b, 1, 2));
        assert_ne!(gl_transform(&s, &g, &x).unwrap(), x);
        let p = AlgebraElement::from_path(s.quiver(), parse_path("a b b* a*", s.quiver()).unwrap());
        let t = s.trace(&p).unwrap();
        assert_eq!(gl_transform(&s, &g, &t).unwrap(), t);
    }

    #[test]
    fn rejects_invalid_group_elements() {
        let s = space("vertices 2; arrows a: 1 -> 2;", &[1, 2]);
        let f = Polynomial::one();
        assert_eq!(
            gl_transform(&s, &m(&[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]]), &f),
            Err(Error::NotBlockDiagonal { row: 1, column: 3 })
        );
        assert_eq!(
            gl_transform(&s, &m(&[&[1, 0, 0], &[0, 1, 2], &[0, 2, 4]]), &f),
            Err(Error::SingularBlock { vertex: 2 })
        );
        assert_eq!(
            gl_transform(&s, &m(&[&[1, 0], &[0, 1]]), &f),
            Err(Error::MatrixSize { expected: 3, actual: 2 })
        );
    }
}

//! The coordinate ring of `Rep(KQ̄, α)`.
//!
//! An arrow `a: v -> w` is sent to the generic matrix whose entries
//! `x(a,i,j)` fill rows `block(w)` and columns `block(v)`; all other entries
//! are zero. Linear maps compose right to left, so a path `p_1 … p_ℓ`
//! (travel order) evaluates to `M(p_ℓ)·…·M(p_1)`, and concatenation is
//! reversed: `evaluate(x·y) = evaluate(y)·evaluate(x)`. Traces do not see
//! the difference.

use std::collections::BTreeMap;


use crate::algebra::AlgebraElement;
use crate::derivation::derivation_apply;
use crate::error::{Error, Result};
use crate::necklace::Necklace;
use crate::path::Path;
use crate::quiver::{Arrow, QuiverRef};
use crate::rational::Rational;
use crate::rep::dimension::DimensionVector;
use crate::rep::matrix::PolyMatrix;
use crate::rep::poly::{Polynomial, Var};

/// A doubled quiver together with a dimension vector, with the constant
/// idempotent matrices and the generic arrow matrices precomputed.
#[derive(Debug, Clone)]
pub struct RepSpace {
    quiver: QuiverRef,
    alpha: DimensionVector,
    idempotents: Vec<PolyMatrix>,
    generic: Vec<PolyMatrix>,
}

impl RepSpace {
    pub fn new(quiver: &QuiverRef, alpha: DimensionVector) -> Result<Self> {
        alpha.check(quiver.vertex_count())?;
        let n = alpha.total();
        let idempotents = (0..quiver.vertex_count())
            .map(|v| {
                let mut m = PolyMatrix::zero(n);
                for i in alpha.block(v) {
                    m.set(i, i, Polynomial::one());
                }
                m
            })
            .collect();
        let generic = quiver
            .arrows()
            .map(|a| {
                let mut m = PolyMatrix::zero(n);
                for i in alpha.block(quiver.head(a)) {
                    for j in alpha.block(quiver.tail(a)) {
                        m.set(i, j, Polynomial::var(Var::new(a, i, j)));
                    }
                }
                m
            })
            .collect();
        Ok(Self {
            quiver: quiver.clone(),
            alpha,
            idempotents,
            generic,
        })
    }

    pub fn quiver(&self) -> &QuiverRef {
        &self.quiver
    }

    pub fn alpha(&self) -> &DimensionVector {
        &self.alpha
    }

    pub fn n(&self) -> usize {
        self.alpha.total()
    }

    /// `Δ^v`.
    pub fn idempotent(&self, v: usize) -> Result<&PolyMatrix> {
        self.idempotents.get(v).ok_or(Error::VertexOutOfRange {
            index: v + 1,
            vertex_count: self.quiver.vertex_count(),
        })
    }

    pub fn generic(&self, a: Arrow) -> &PolyMatrix {
        &self.generic[a.index()]
    }

    /// Whether `v` is one of the coordinates of this scheme.
    pub fn has_var(&self, v: Var) -> bool {
        v.arrow.index() < self.quiver.arrow_count()
            && self.alpha.block(self.quiver.head(v.arrow)).contains(&(v.row as usize))
            && self.alpha.block(self.quiver.tail(v.arrow)).contains(&(v.col as usize))
    }

    /// All coordinates, in variable order.
    pub fn variables(&self) -> Vec<Var> {
        self.quiver
            .arrows()
            .flat_map(|a| {
                let rows = self.alpha.block(self.quiver.head(a));
                let cols = self.alpha.block(self.quiver.tail(a));
                rows.flat_map(move |i| cols.clone().map(move |j| Var::new(a, i, j)))
            })
            .collect()
    }

    pub fn evaluate_path(&self, p: &Path) -> PolyMatrix {
        let mut arrows = p.arrows().iter();
        let Some(&first) = arrows.next() else {
            return self.idempotents[p.start()].clone();
        };
        arrows.fold(self.generic(first).clone(), |acc, &a| self.generic(a) * &acc)
    }

    pub fn evaluate(&self, x: &AlgebraElement) -> Result<PolyMatrix> {
        self.check(x.quiver())?;
        let mut out = PolyMatrix::zero(self.n());
        for (p, c) in x.terms() {
            out = &out + &self.evaluate_path(p).scale(c);
        }
        Ok(out)
    }

    pub fn trace(&self, x: &AlgebraElement) -> Result<Polynomial> {
        self.check(x.quiver())?;
        let mut out = Polynomial::zero();
        for (p, c) in x.terms() {
            if p.is_closed() {
                out.add_assign_scaled(&self.trace_path(p), c);
            }
        }
        Ok(out)
    }

    /// Trace of a single path; open paths have zero trace.
    pub fn trace_path(&self, p: &Path) -> Polynomial {
        if !p.is_closed() {
            return Polynomial::zero();
        }
        if p.is_trivial() {
            return Polynomial::constant(Rational::from_integer(
                self.alpha.alpha()[p.start()].into(),
            ));
        }
        self.evaluate_path(p).trace()
    }

    pub fn trace_necklace(&self, n: &Necklace) -> Polynomial {
        self.trace_path(&n.representative())
    }

    /// `ψ_p`: the derivation of the coordinate ring with
    /// `ψ_p(x(b,i,j)) = evaluate(d_p(b))_{ij}`.
    pub fn lift(&self, p: &Necklace) -> LiftedDerivation {
        let mut images = BTreeMap::new();
        if !p.is_trivial() {
            for b in self.quiver.arrows() {
                let db = derivation_apply(p, &AlgebraElement::from_path(&self.quiver, Path::arrow(&self.quiver, b)));
                if db.is_zero() {
                    continue;
                }
                let m = self.evaluate(&db).expect("same quiver");
                for i in self.alpha.block(self.quiver.head(b)) {
                    for j in self.alpha.block(self.quiver.tail(b)) {
                        let e = m.get(i, j);
                        if !e.is_zero() {
                            images.insert(Var::new(b, i, j), e.clone());
                        }
                    }
                }
            }
        }
        LiftedDerivation { images }
    }

    fn check(&self, q: &QuiverRef) -> Result<()> {
        if self.quiver.same_as(q) {
            Ok(())
        } else {
            Err(Error::MixedQuiver)
        }
    }
}

/// A derivation of the coordinate ring given by its values on coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedDerivation {
    images: BTreeMap<Var, Polynomial>,
}

impl LiftedDerivation {
    pub fn image(&self, v: Var) -> Polynomial {
        self.images.get(&v).cloned().unwrap_or_default()
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        f.derive(|v| self.images.get(&v))
    }
}

/// `Δ^v`, the constant diagonal 0/1 matrix selecting block `v`.
pub fn idempotent_matrix(space: &RepSpace, v: usize) -> Result<PolyMatrix> {
    space.idempotent(v).cloned()
}

/// The generic matrix of coordinates `x(a,i,j)` for arrow `a`.
pub fn generic_matrix(space: &RepSpace, a: Arrow) -> PolyMatrix {
    space.generic(a).clone()
}

pub fn evaluate(space: &RepSpace, x: &AlgebraElement) -> Result<PolyMatrix> {
    space.evaluate(x)
}

/// `tr_α x = Σ_i x_ii`.
pub fn trace(space: &RepSpace, x: &AlgebraElement) -> Result<Polynomial> {
    space.trace(x)
}

/// `ψ_p(f)`.
pub fn lift_derivation(space: &RepSpace, p: &Necklace, f: &Polynomial) -> Polynomial {
    space.lift(p).apply(f)
}

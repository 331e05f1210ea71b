//! Quivers and their doubles.
//!
//! Vertices are 0-based internally and printed 1-based (`e_1`, DSL indices).

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An arrow of a [`DoubledQuiver`], indexed in the global arrow order.
///
/// Base arrow `k` is `Arrow(2k)` and its reverse is `Arrow(2k + 1)`, so the
/// derived ordering is declaration order with each base arrow before its star.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow(pub u32);

impl Arrow {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn star(self) -> Arrow {
        Arrow(self.0 ^ 1)
    }

    pub fn is_base(self) -> bool {
        self.0 & 1 == 0
    }

    /// ε: `+1` on base arrows, `-1` on reversed ones.
    pub fn sign(self) -> i8 {
        if self.is_base() {
            1
        } else {
            -1
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseArrow {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<BaseArrow>,
}

impl Quiver {
    /// Builds a quiver from `(id, tail, head)` triples with 0-based vertices.
    pub fn new<S: Into<String>>(
        vertex_count: usize,
        arrows: impl IntoIterator<Item = (S, usize, usize)>,
    ) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (id, tail, head) in arrows {
            let id = id.into();
            for v in [tail, head] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        index: v + 1,
                        vertex_count,
                    });
                }
            }
            if !seen.insert(id.clone()) {
                return Err(Error::DuplicateArrow(id));
            }
            out.push(BaseArrow { id, tail, head });
        }
        Ok(Self {
            vertex_count,
            arrows: out,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[BaseArrow] {
        &self.arrows
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowData {
    pub id: String,
    pub tail: usize,
    pub head: usize,
    pub star: Arrow,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubledQuiver {
    base: Quiver,
    arrows: Vec<ArrowData>,
}

pub type QuiverRef = Arc<DoubledQuiver>;

/// Adjoins a reverse arrow `a*: w -> v` for every `a: v -> w`.
pub fn double(q: &Quiver) -> DoubledQuiver {
    let mut arrows = Vec::with_capacity(2 * q.arrows.len());
    for (k, a) in q.arrows.iter().enumerate() {
        let base = Arrow(2 * k as u32);
        arrows.push(ArrowData {
            id: a.id.clone(),
            tail: a.tail,
            head: a.head,
            star: base.star(),
            sign: 1,
        });
        arrows.push(ArrowData {
            id: format!("{}*", a.id),
            tail: a.head,
            head: a.tail,
            star: base,
            sign: -1,
        });
    }
    DoubledQuiver {
        base: q.clone(),
        arrows,
    }
}

impl DoubledQuiver {
    pub fn new(base: &Quiver) -> QuiverRef {
        Arc::new(double(base))
    }

    pub fn base(&self) -> &Quiver {
        &self.base
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self) -> impl Iterator<Item = Arrow> + '_ {
        (0..self.arrows.len() as u32).map(Arrow)
    }

    pub fn base_arrows(&self) -> impl Iterator<Item = Arrow> + '_ {
        self.arrows().filter(|a| a.is_base())
    }

    pub fn data(&self, a: Arrow) -> &ArrowData {
        &self.arrows[a.index()]
    }

    pub fn tail(&self, a: Arrow) -> usize {
        self.arrows[a.index()].tail
    }

    pub fn head(&self, a: Arrow) -> usize {
        self.arrows[a.index()].head
    }

    pub fn id(&self, a: Arrow) -> &str {
        &self.arrows[a.index()].id
    }

    pub fn star(&self, a: Arrow) -> Arrow {
        self.arrows[a.index()].star
    }

    pub fn sign(&self, a: Arrow) -> i8 {
        self.arrows[a.index()].sign
    }

    pub fn arrow_by_id(&self, id: &str) -> Option<Arrow> {
        self.arrows
            .iter()
            .position(|d| d.id == id)
            .map(|i| Arrow(i as u32))
    }

    /// Arrows leaving `v`, in global order.
    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = Arrow> + '_ {
        self.arrows().filter(move |&a| self.tail(a) == v)
    }

    pub(crate) fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

impl fmt::Display for DoubledQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices {}; arrows ", self.vertex_count())?;
        for (i, a) in self.base.arrows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}: {} -> {}", a.id, a.tail + 1, a.head + 1)?;
        }
        f.write_str(";")
    }
}

//! Paths in a doubled quiver, written in travel order.

use crate::error::{Error, Result};
use crate::quiver::{Arrow, DoubledQuiver};

/// A path `p = p_1 p_2 … p_ℓ` with `head(p_i) = tail(p_{i+1})`.
///
/// The trivial path `e_v` has no arrows and `start == end == v`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    start: usize,
    end: usize,
    arrows: Vec<Arrow>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Self {
            start: v,
            end: v,
            arrows: Vec::new(),
        }
    }

    /// Checks composability of consecutive arrows.
    pub fn from_arrows(dq: &DoubledQuiver, arrows: Vec<Arrow>) -> Result<Self> {
        let Some(&first) = arrows.first() else {
            return Err(Error::Syntax {
                line: 1,
                column: 1,
                message: "empty path needs an explicit vertex".into(),
            });
        };
        for a in &arrows {
            if a.index() >= dq.arrow_count() {
                return Err(Error::UnknownArrow(format!("#{}", a.0)));
            }
        }
        for w in arrows.windows(2) {
            if dq.head(w[0]) != dq.tail(w[1]) {
                return Err(Error::NotComposable {
                    first: dq.id(w[0]).to_string(),
                    second: dq.id(w[1]).to_string(),
                    head: dq.head(w[0]) + 1,
                    tail: dq.tail(w[1]) + 1,
                });
            }
        }
        let start = dq.tail(first);
        let end = dq.head(*arrows.last().unwrap());
        Ok(Self { start, end, arrows })
    }

    pub fn arrow(dq: &DoubledQuiver, a: Arrow) -> Self {
        Self {
            start: dq.tail(a),
            end: dq.head(a),
            arrows: vec![a],
        }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.start == self.end
    }

    /// `self` followed by `other`, or `None` when the endpoints do not meet.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.end != other.start {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.len() + other.len());
        arrows.extend_from_slice(&self.arrows);
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            start: self.start,
            end: other.end,
            arrows,
        })
    }

    /// The subpath of arrows `range`; an empty range gives the trivial path
    /// at the vertex where the cut happens.
    pub fn slice(&self, dq: &DoubledQuiver, from: usize, to: usize) -> Path {
        assert!(from <= to && to <= self.len(), "slice out of bounds");
        if from == to {
            let v = if from == 0 {
                self.start
            } else {
                dq.head(self.arrows[from - 1])
            };
            return Path::trivial(v);
        }
        Path {
            start: dq.tail(self.arrows[from]),
            end: dq.head(self.arrows[to - 1]),
            arrows: self.arrows[from..to].to_vec(),
        }
    }

    /// Splits into `self[..at]` and `self[at..]`.
    pub fn split_at(&self, dq: &DoubledQuiver, at: usize) -> (Path, Path) {
        (self.slice(dq, 0, at), self.slice(dq, at, self.len()))
    }

    /// Cyclic rotation starting at arrow `offset`. Only meaningful for closed paths.
    pub fn rotate(&self, dq: &DoubledQuiver, offset: usize) -> Path {
        debug_assert!(self.is_closed());
        if self.is_trivial() {
            return self.clone();
        }
        let k = offset % self.len();
        let mut arrows = Vec::with_capacity(self.len());
        arrows.extend_from_slice(&self.arrows[k..]);
        arrows.extend_from_slice(&self.arrows[..k]);
        let v = dq.tail(arrows[0]);
        Path {
            start: v,
            end: v,
            arrows,
        }
    }

    /// Text form accepted by [`crate::parse_path`]: `e_1` or `a b* c`.
    pub fn display(&self, dq: &DoubledQuiver) -> String {
        if self.is_trivial() {
            return format!("e_{}", self.start + 1);
        }
        let ids: Vec<&str> = self.arrows.iter().map(|&a| dq.id(a)).collect();
        ids.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{double, Quiver};

    fn a3() -> DoubledQuiver {
        double(&Quiver::new(3, [("a", 0, 1), ("b", 1, 2)]).unwrap())
    }

    #[test]
    fn composability() {
        let dq = a3();
        let a = dq.arrow_by_id("a").unwrap();
        let b = dq.arrow_by_id("b").unwrap();
        let p = Path::from_arrows(&dq, vec![a, b]).unwrap();
        assert_eq!((p.start(), p.end()), (0, 2));
        assert!(Path::from_arrows(&dq, vec![b, a]).is_err());
        assert!(Path::arrow(&dq, a).concat(&Path::arrow(&dq, a)).is_none());
        assert_eq!(Path::trivial(0).concat(&Path::arrow(&dq, a)), Some(Path::arrow(&dq, a)));
        assert_eq!(Path::arrow(&dq, a).concat(&Path::trivial(1)), Some(Path::arrow(&dq, a)));
    }

    #[test]
    fn slices_keep_endpoints() {
        let dq = a3();
        let a = dq.arrow_by_id("a").unwrap();
        let b = dq.arrow_by_id("b").unwrap();
        let bs = dq.arrow_by_id("b*").unwrap();
        let p = Path::from_arrows(&dq, vec![a, b, bs]).unwrap();
        assert_eq!(p.slice(&dq, 0, 0), Path::trivial(0));
        assert_eq!(p.slice(&dq, 1, 1), Path::trivial(1));
        assert_eq!(p.slice(&dq, 3, 3), Path::trivial(1));
        let (l, r) = p.split_at(&dq, 2);
        assert_eq!(l.concat(&r), Some(p.clone()));
    }

    #[test]
    fn rotation_of_closed_path() {
        let dq = a3();
        let a = dq.arrow_by_id("a").unwrap();
        let s = dq.arrow_by_id("a*").unwrap();
        let p = Path::from_arrows(&dq, vec![a, s]).unwrap();
        let r = p.rotate(&dq, 1);
        assert_eq!(r.arrows(), &[s, a]);
        assert_eq!((r.start(), r.end()), (1, 1));
        assert_eq!(p.rotate(&dq, 2), p);
    }
}

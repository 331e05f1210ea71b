use std::ops::Range;

use crate::error::{Error, Result};

/// `α ∈ ℕ^m`; vertex `v` owns the big-matrix indices `block(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DimensionVector {
    alpha: Vec<usize>,
    offsets: Vec<usize>,
}

impl DimensionVector {
    pub fn new(alpha: Vec<usize>) -> Self {
        let mut offsets = Vec::with_capacity(alpha.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for &a in &alpha {
            acc += a;
            offsets.push(acc);
        }
        Self { alpha, offsets }
    }

    /// Parses `1,2`.
    pub fn parse(text: &str) -> Result<Self> {
        let alpha = text
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                s.trim().parse::<usize>().map_err(|_| Error::Syntax {
                    line: 1,
                    column: 1,
                    message: format!("bad dimension entry `{}`", s.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(alpha))
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn vertex_count(&self) -> usize {
        self.alpha.len()
    }

    /// `n = α_1 + … + α_m`.
    pub fn total(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn block(&self, v: usize) -> Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    pub fn vertex_of(&self, index: usize) -> usize {
        (0..self.alpha.len())
            .find(|&v| self.block(v).contains(&index))
            .expect("index inside some block")
    }

    pub fn check(&self, vertex_count: usize) -> Result<()> {
        if self.alpha.len() == vertex_count {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: vertex_count,
                actual: self.alpha.len(),
            })
        }
    }

    /// Every dimension vector with `m` entries and total at most `max_total`,
    /// excluding the zero vector.
    pub fn all_up_to(m: usize, max_total: usize) -> Vec<DimensionVector> {
        fn rec(m: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == m {
                out.push(cur.clone());
                return;
            }
            for a in 0..=left {
                cur.push(a);
                rec(m, left - a, cur, out);
                cur.pop();
            }
        }
        let mut raw = Vec::new();
        rec(m, max_total, &mut Vec::new(), &mut raw);
        raw.into_iter()
            .filter(|a| a.iter().any(|&x| x > 0))
            .map(DimensionVector::new)
            .collect()
    }
}

impl std::fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.alpha.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

//! Batch checks behind the command line tool. Each returns a [`Report`].
//!
//! Cases are evaluated in parallel; results keep input order, so identical
//! inputs and seeds give identical reports.

use std::fmt::Write;

use rand::seq::index;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::derivation::bracket_necklaces;
use crate::dsl::parse_path;
use crate::error::{Error, Result};
use crate::necklace::{enumerate_necklaces, Necklace, NecklaceElement};
use crate::preprojective::{check_moment_invariance, Weight};
use crate::quiver::QuiverRef;
use crate::random;
use crate::rep::{poisson_bracket, DimensionVector, RepSpace, TraceExpression};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub seed: u64,
    pub cases: usize,
    pub passes: usize,
    pub failures: Vec<Failure>,
    /// Free-form result lines (bracket value, layout description).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub output: Vec<String>,
}

impl Report {
    fn new(command: &str, seed: u64) -> Self {
        Self {
            command: command.into(),
            seed,
            cases: 0,
            passes: 0,
            failures: Vec::new(),
            output: Vec::new(),
        }
    }

    fn record(&mut self, outcome: Option<Failure>) {
        self.cases += 1;
        match outcome {
            None => self.passes += 1,
            Some(f) => self.failures.push(f),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: {}", self.command);
        let _ = writeln!(s, "seed: {}", self.seed);
        for line in &self.output {
            let _ = writeln!(s, "{line}");
        }
        let _ = writeln!(
            s,
            "cases: {}  passes: {}  failures: {}",
            self.cases,
            self.passes,
            self.failures.len()
        );
        for f in &self.failures {
            let _ = writeln!(s, "FAIL {}\n  lhs: {}\n  rhs: {}", f.inputs, f.lhs, f.rhs);
        }
        let _ = writeln!(s, "{}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
    }
}

/// Parses a path that must be closed.
pub fn parse_closed(text: &str, quiver: &QuiverRef) -> Result<Necklace> {
    let p = parse_path(text, quiver)?;
    Necklace::of_closed_path(quiver, &p)
}

/// `⟨p̄, q̄⟩` for two closed path expressions.
pub fn bracket(quiver: &QuiverRef, p: &str, q: &str, seed: u64) -> Result<Report> {
    let p = parse_closed(p, quiver)?;
    let q = parse_closed(q, quiver)?;
    let value = NecklaceElement::from_necklace(quiver, p).bracket(&NecklaceElement::from_necklace(quiver, q));
    let mut report = Report::new("bracket", seed);
    report.output.push(value.to_string());
    report.record(None);
    Ok(report)
}

/// `d_p(w − λ) = 0` for every necklace with at most `max_len` arrows.
pub fn moment_check(quiver: &QuiverRef, lambda: &Weight, max_len: usize, seed: u64) -> Result<Report> {
    lambda.to_element(quiver)?;
    let necklaces = enumerate_necklaces(quiver, max_len);
    let outcomes: Vec<Option<Failure>> = necklaces
        .par_iter()
        .map(|n| {
            let r = check_moment_invariance(n, quiver, lambda).expect("weight checked");
            (!r.is_zero()).then(|| Failure {
                inputs: format!("p = {}", n.display(quiver)),
                lhs: r.to_string(),
                rhs: "0".into(),
            })
        })
        .collect();
    let mut report = Report::new("moment-check", seed);
    for o in outcomes {
        report.record(o);
    }
    Ok(report)
}

/// Ordered pairs of necklaces up to `max_len`: all of them when there are at
/// most `cap`, otherwise `cap` pairs drawn without replacement.
pub fn necklace_pairs(quiver: &QuiverRef, max_len: usize, cap: usize, seed: u64) -> Vec<(Necklace, Necklace)> {
    let necklaces = enumerate_necklaces(quiver, max_len);
    let k = necklaces.len();
    let total = k * k;
    let pick = |i: usize| (necklaces[i / k].clone(), necklaces[i % k].clone());
    if total <= cap {
        return (0..total).map(pick).collect();
    }
    let mut rng = random::rng(seed);
    let mut chosen = index::sample(&mut rng, total, cap).into_vec();
    chosen.sort_unstable();
    chosen.into_iter().map(pick).collect()
}

/// `{tr p, tr q} = tr⟨p̄, q̄⟩` on sampled pairs.
pub fn trace_compat(
    quiver: &QuiverRef,
    alpha: &DimensionVector,
    max_len: usize,
    sample: usize,
    seed: u64,
) -> Result<Report> {
    let space = RepSpace::new(quiver, alpha.clone())?;
    let pairs = necklace_pairs(quiver, max_len, sample, seed);
    let outcomes: Vec<Option<Failure>> = pairs
        .par_iter()
        .map(|(p, q)| {
            let lhs = poisson_bracket(
                &space,
                &TraceExpression::symbol(p.clone()),
                &TraceExpression::symbol(q.clone()),
            );
            let rhs = space
                .trace(&bracket_necklaces(quiver, p, q).to_algebra())
                .expect("same quiver");
            (lhs != rhs).then(|| Failure {
                inputs: format!("p = {}, q = {}, alpha = {}", p.display(quiver), q.display(quiver), alpha),
                lhs: lhs.display(quiver),
                rhs: rhs.display(quiver),
            })
        })
        .collect();
    let mut report = Report::new("trace-compat", seed);
    for o in outcomes {
        report.record(o);
    }
    Ok(report)
}

/// Cyclic Jacobi sums on random necklace triples.
pub fn jacobi_test(quiver: &QuiverRef, max_len: usize, trials: usize, seed: u64) -> Report {
    let mut report = Report::new("jacobi-test", seed);
    if trials == 0 {
        return report;
    }
    let pool = enumerate_necklaces(quiver, max_len);
    let mut rng = random::rng(seed);
    let triples: Vec<[Necklace; 3]> = (0..trials)
        .map(|_| {
            [
                random::necklace(&pool, &mut rng),
                random::necklace(&pool, &mut rng),
                random::necklace(&pool, &mut rng),
            ]
        })
        .collect();
    let outcomes: Vec<Option<Failure>> = triples
        .par_iter()
        .map(|[x, y, z]| {
            let el = |n: &Necklace| NecklaceElement::from_necklace(quiver, n.clone());
            let (x, y, z) = (el(x), el(y), el(z));
            let sum = &(&x.bracket(&y.bracket(&z)) + &y.bracket(&z.bracket(&x))) + &z.bracket(&x.bracket(&y));
            (!sum.is_zero()).then(|| Failure {
                inputs: format!("{x}, {y}, {z}"),
                lhs: sum.to_string(),
                rhs: "0".into(),
            })
        })
        .collect();
    for o in outcomes {
        report.record(o);
    }
    report
}

/// Block layout, idempotent matrices and coordinate counts.
pub fn rep_info(quiver: &QuiverRef, alpha: &DimensionVector, seed: u64) -> Result<Report> {
    let space = RepSpace::new(quiver, alpha.clone())?;
    let mut report = Report::new("rep-info", seed);
    let n = alpha.total();
    report.output.push(format!("alpha = {alpha}"));
    report.output.push(format!("n = {n}"));
    for v in 0..alpha.vertex_count() {
        let b = alpha.block(v);
        let diag: Vec<String> = (0..n)
            .map(|i| if b.contains(&i) { "1" } else { "0" }.to_string())
            .collect();
        report.output.push(format!(
            "vertex {}: indices {}..={} (size {}), Δ^{} = diag({})",
            v + 1,
            b.start + 1,
            b.end,
            b.len(),
            v + 1,
            diag.join(",")
        ));
    }
    let vars = space.variables();
    for a in quiver.arrows() {
        let count = vars.iter().filter(|x| x.arrow == a).count();
        report.output.push(format!(
            "arrow {}: {} -> {}, {} variables",
            quiver.id(a),
            quiver.tail(a) + 1,
            quiver.head(a) + 1,
            count
        ));
    }
    report.output.push(format!("total variables = {}", vars.len()));
    report.record(None);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_quiver;
    use crate::rational::int;

    fn loop_q() -> QuiverRef {
        parse_quiver("vertices 1; arrows a: 1 -> 1;").unwrap()
    }

    #[test]
    fn bracket_reports() {
        let q = loop_q();
        assert_eq!(bracket(&q, "a", "a*", 0).unwrap().output, ["−1·e_1"]);
        assert_eq!(bracket(&q, "a", "a", 0).unwrap().output, ["0"]);
        assert_eq!(bracket(&q, "e_1", "a a*", 0).unwrap().output, ["0"]);
        let a2 = parse_quiver("vertices 2; arrows a: 1 -> 2;").unwrap();
        assert!(matches!(bracket(&a2, "a", "a a*", 0), Err(Error::OpenPath { start: 1, end: 2, .. })));
    }

    #[test]
    fn moment_reports() {
        let q = loop_q();
        let r0 = moment_check(&q, &Weight(vec![int(0)]), 4, 0).unwrap();
        assert!(r0.passed());
        assert_eq!(r0.cases, 1 + 2 + 3 + 4 + 6);
        let r = moment_check(&q, &Weight::zero(1), 0, 0).unwrap();
        assert_eq!((r.cases, r.passes), (1, 1));
        let a = moment_check(&q, &Weight(vec![int(0)]), 6, 0).unwrap();
        let b = moment_check(&q, &Weight(vec![int(1)]), 6, 0).unwrap();
        assert!(a.passed() && b.passed());
        assert_eq!(a, b);
        assert!(moment_check(&q, &Weight(vec![]), 2, 0).is_err());
    }

    #[test]
    fn trace_compat_reports() {
        let q = loop_q();
        let r = trace_compat(&q, &DimensionVector::new(vec![1]), 2, 1000, 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.cases, 36);
        let r = trace_compat(&q, &DimensionVector::new(vec![1]), 2, 0, 3).unwrap();
        assert_eq!((r.cases, r.passed()), (0, true));
        let a2 = parse_quiver("vertices 2; arrows a: 1 -> 2;").unwrap();
        assert!(trace_compat(&a2, &DimensionVector::new(vec![1, 1]), 4, 200, 1).unwrap().passed());
        assert!(trace_compat(&a2, &DimensionVector::new(vec![1]), 4, 200, 1).is_err());
    }

    #[test]
    fn pair_sampling_is_deterministic() {
        let q = loop_q();
        let a = necklace_pairs(&q, 4, 50, 9);
        assert_eq!(a.len(), 50);
        assert_eq!(a, necklace_pairs(&q, 4, 50, 9));
        assert_ne!(a, necklace_pairs(&q, 4, 50, 10));
    }

    #[test]
    fn jacobi_reports() {
        let q = loop_q();
        let r = jacobi_test(&q, 5, 100, 1);
        assert!(r.passed());
        assert_eq!(r.cases, 100);
        assert_eq!(jacobi_test(&q, 5, 0, 1).cases, 0);
    }

    #[test]
    fn rep_info_layout() {
        let q = parse_quiver("vertices 2; arrows a: 1 -> 2;").unwrap();
        let r = rep_info(&q, &DimensionVector::new(vec![1, 2]), 0).unwrap();
        assert!(r.output.contains(&"n = 3".to_string()));
        assert!(r.output.iter().any(|l| l.contains("Δ^1 = diag(1,0,0)")));
        assert!(r.output.contains(&"total variables = 4".to_string()));
    }

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("x", 5);
        r.record(Some(Failure {
            inputs: "i".into(),
            lhs: "l".into(),
            rhs: "r".into(),
        }));
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }
}

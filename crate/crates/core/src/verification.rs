//! Certificate checkers: astray goodness and run-based type witnesses.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge_count, Edge, EdgeLabeling, Label, Vertex};

/// Outcome of [`check_astray`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AstrayReport {
    pub pass: bool,
    pub eps: u64,
    pub a: u64,
    pub b: u32,
    /// Largest number of astray edges at one vertex.
    pub b_actual: u32,
    /// `a` has the parity of `ε`.
    pub parity: bool,
    /// The astray labels are the centred interval.
    pub centred: bool,
    /// Every vertex has at most `b` astray edges.
    pub tolerance: bool,
    /// Every vertex has as many lower as higher edges.
    pub balance: bool,
    /// Every vertex averages `(ε+1)/2` over its non-astray edges.
    pub average: bool,
    pub first_violation: Option<String>,
}

impl AstrayReport {
    pub fn condition1(&self) -> bool {
        self.parity && self.centred
    }

    pub fn condition2(&self) -> bool {
        self.tolerance && self.balance
    }

    pub fn condition3(&self) -> bool {
        self.average
    }
}

/// Checks whether `astray` certifies `t` as `b`-astray good.
pub fn check_astray(t: &EdgeLabeling, astray: &[Edge], b: u32) -> AstrayReport {
    let n = t.order();
    let eps = edge_count(n);
    let mut report = AstrayReport {
        pass: false,
        eps,
        a: astray.len() as u64,
        b,
        b_actual: 0,
        parity: true,
        centred: true,
        tolerance: true,
        balance: true,
        average: true,
        first_violation: None,
    };
    let note = |r: &mut AstrayReport, msg: String| {
        if r.first_violation.is_none() {
            r.first_violation = Some(msg);
        }
    };

    let mut in_a = vec![false; eps as usize];
    for e in astray {
        if e.u == 0 || e.u >= e.v || e.v > n {
            report.centred = false;
            note(
                &mut report,
                format!("astray edge {e} is not an edge of K_{n}"),
            );
            return report;
        }
        let k = t.position_of(*e);
        if std::mem::replace(&mut in_a[k], true) {
            report.centred = false;
            note(&mut report, format!("astray edge {e} is listed twice"));
            return report;
        }
    }

    let a = report.a;
    if a % 2 != eps % 2 {
        report.parity = false;
        note(
            &mut report,
            format!("|A| = {a} and ε = {eps} differ in parity"),
        );
    }
    let lo = eps.saturating_sub(a) / 2;
    let hi = (eps + a) / 2;
    for (k, &x) in t.values().iter().enumerate() {
        let centre = u64::from(x) > lo && u64::from(x) <= hi;
        if in_a[k] != centre {
            report.centred = false;
            let e = t.edge_at(k);
            let what = if in_a[k] { "astray" } else { "non-astray" };
            note(
                &mut report,
                format!(
                    "{what} edge {e} has label {x}, centre is [{}, {hi}]",
                    lo + 1
                ),
            );
            break;
        }
    }

    let g = t.graph();
    for v in 1..=n {
        let (mut na, mut nl, mut nh, mut rest, mut sum) = (0u32, 0u32, 0u32, 0u64, 0u64);
        for k in g.incident_positions(v) {
            let x = u64::from(t.values()[k]);
            if in_a[k] {
                na += 1;
                continue;
            }
            rest += 1;
            sum += x;
            if x <= lo {
                nl += 1;
            } else if x > hi {
                nh += 1;
            }
        }
        report.b_actual = report.b_actual.max(na);
        if na > b && report.tolerance {
            report.tolerance = false;
            note(
                &mut report,
                format!("vertex {v} has {na} astray edges, more than b = {b}"),
            );
        }
        if nl != nh && report.balance {
            report.balance = false;
            note(
                &mut report,
                format!("vertex {v} has {nl} lower and {nh} higher edges"),
            );
        }
        if 2 * sum != rest * (eps + 1) && report.average {
            report.average = false;
            note(
                &mut report,
                format!(
                    "vertex {v}: non-astray sum {sum} over {rest} edges is off the average (ε+1)/2"
                ),
            );
        }
    }
    report.pass = report.condition1() && report.condition2() && report.condition3();
    report
}

/// A maximal run `[start, end]` of consecutive labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Run {
    pub start: Label,
    pub end: Label,
}

impl Run {
    pub fn len(&self) -> u32 {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: Label) -> bool {
        self.start <= x && x <= self.end
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexWitness {
    pub vertex: Vertex,
    /// Qualifying runs in increasing label order.
    pub runs: Vec<Run>,
}

impl VertexWitness {
    pub fn total(&self) -> u32 {
        self.runs.iter().map(Run::len).sum()
    }

    /// Total length of the `m` longest runs.
    pub fn top(&self, m: usize) -> u32 {
        let mut lens: Vec<u32> = self.runs.iter().map(Run::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens.iter().take(m).sum()
    }
}

/// Per-vertex maximal runs of length at least `2p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeWitness {
    pub p: u32,
    /// Largest run count at a vertex.
    pub m: u32,
    /// Smallest total run length at a vertex.
    pub l: u32,
    pub vertices: Vec<VertexWitness>,
}

impl TypeWitness {
    /// Whether every vertex has `m` runs totalling at least `l`.
    pub fn certifies(&self, m: u32, l: u32) -> bool {
        self.vertices.iter().all(|w| w.top(m as usize) >= l)
    }

    /// The largest `l` such that `certifies(m, l)` holds.
    pub fn best_l(&self, m: u32) -> u32 {
        self.vertices
            .iter()
            .map(|w| w.top(m as usize))
            .min()
            .unwrap_or(0)
    }

    /// Edges at `v` whose labels fall in `run`.
    pub fn preimage(t: &EdgeLabeling, v: Vertex, run: Run) -> Vec<Edge> {
        t.graph()
            .incident_positions(v)
            .filter(|&k| run.contains(t.values()[k]))
            .map(|k| t.edge_at(k))
            .collect()
    }
}

/// Maximal runs of `labels` (sorted ascending) with length at least `min_len`.
pub fn maximal_runs(labels: &[Label], min_len: u32) -> Vec<Run> {
    let mut out = Vec::new();
    let mut k = 0;
    while k < labels.len() {
        let start = labels[k];
        let mut end = start;
        while k + 1 < labels.len() && labels[k + 1] == end + 1 {
            k += 1;
            end += 1;
        }
        let run = Run { start, end };
        if run.len() >= min_len {
            out.push(run);
        }
        k += 1;
    }
    out
}

pub fn find_type_witness(t: &EdgeLabeling, p: u32) -> Result<TypeWitness> {
    if p < 1 {
        return Err(Error::InvalidParameter("type witness needs p >= 1".into()));
    }
    let vertices: Vec<VertexWitness> = (1..=t.order())
        .map(|v| VertexWitness {
            vertex: v,
            runs: maximal_runs(&t.label_set(v), 2 * p),
        })
        .collect();
    let m = vertices
        .iter()
        .map(|w| w.runs.len() as u32)
        .max()
        .unwrap_or(0);
    let l = vertices.iter().map(VertexWitness::total).min().unwrap_or(0);
    Ok(TypeWitness { p, m, l, vertices })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs_split_on_gaps() {
        let r = maximal_runs(&[1, 2, 3, 5, 6, 9], 2);
        assert_eq!(r, vec![Run { start: 1, end: 3 }, Run { start: 5, end: 6 }]);
        assert!(maximal_runs(&[1, 3, 5], 2).is_empty());
        assert_eq!(maximal_runs(&[4], 1), vec![Run { start: 4, end: 4 }]);
    }

    #[test]
    fn top_takes_longest() {
        let w = VertexWitness {
            vertex: 1,
            runs: vec![
                Run { start: 1, end: 2 },
                Run { start: 5, end: 9 },
                Run { start: 11, end: 13 },
            ],
        };
        assert_eq!(w.total(), 10);
        assert_eq!(w.top(1), 5);
        assert_eq!(w.top(2), 8);
    }

    #[test]
    fn k3_has_no_astray_certificate_with_empty_a() {
        let t = EdgeLabeling::from_values(3, vec![1, 2, 3]).unwrap();
        let r = check_astray(&t, &[], 0);
        assert!(!r.pass);
        assert!(!r.parity);
    }

    #[test]
    fn witness_rejects_p_zero() {
        let t = EdgeLabeling::from_values(3, vec![1, 2, 3]).unwrap();
        assert!(find_type_witness(&t, 0).is_err());
    }
}

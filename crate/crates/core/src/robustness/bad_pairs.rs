//! Label pairs that block a clean `±p` shift: same-vertex neighbours at
//! distance `p` (`U₊`, `U₋`) and cross-vertex pairs at distance `p` or `2p`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{edge_count, position, Edge, EdgeLabeling, Label, Vertex};

/// Bad-pair bookkeeping of a labeling at one magnitude.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BadPairIndex {
    pub n: u32,
    pub p: u32,
    /// `u_plus[v-1]`: edges at `v` whose label plus `p` also sits at `v`.
    pub u_plus: Vec<Vec<Edge>>,
    /// `u_minus[v-1]`: edges at `v` whose label minus `p` also sits at `v`.
    pub u_minus: Vec<Vec<Edge>>,
    /// Type I counts per vertex pair, indexed by canonical edge position.
    pub b1: Vec<u32>,
    /// Type II counts per vertex pair, indexed by canonical edge position.
    pub b2: Vec<u32>,
}

/// Vertex pairs `{a, b}` with `a ∈ e`, `b ∈ f`, `a ≠ b`, each listed once.
fn vertex_pairs(e: Edge, f: Edge) -> impl Iterator<Item = Edge> {
    let mut out: Vec<Edge> = Vec::with_capacity(4);
    for a in [e.u, e.v] {
        for b in [f.u, f.v] {
            if a != b {
                let g = Edge::new(a, b);
                if !out.contains(&g) {
                    out.push(g);
                }
            }
        }
    }
    out.into_iter()
}

/// The vertex two distinct edges share, if any.
fn common(e: Edge, f: Edge) -> Option<Vertex> {
    [e.u, e.v].into_iter().find(|&w| f.contains(w))
}

impl BadPairIndex {
    pub fn u_plus_len(&self, v: Vertex) -> usize {
        self.u_plus[v as usize - 1].len()
    }

    pub fn u_minus_len(&self, v: Vertex) -> usize {
        self.u_minus[v as usize - 1].len()
    }

    /// `|B({u, v})|`, both types.
    pub fn b_count(&self, u: Vertex, v: Vertex) -> u32 {
        let k = position(self.n, u.min(v), u.max(v));
        self.b1[k] + self.b2[k]
    }

    /// `|U₊(u)| + |U₋(v)| + 2|B({u, v})|`.
    pub fn score(&self, u: Vertex, v: Vertex) -> u64 {
        (self.u_plus_len(u) + self.u_minus_len(v)) as u64 + 2 * u64::from(self.b_count(u, v))
    }

    pub fn total_u_plus(&self) -> u64 {
        self.u_plus.iter().map(|s| s.len() as u64).sum()
    }

    pub fn total_u_minus(&self) -> u64 {
        self.u_minus.iter().map(|s| s.len() as u64).sum()
    }

    pub fn total_b1(&self) -> u64 {
        self.b1.iter().map(|&c| u64::from(c)).sum()
    }

    pub fn total_b2(&self) -> u64 {
        self.b2.iter().map(|&c| u64::from(c)).sum()
    }

    /// The aggregate inequalities every index satisfies.
    pub fn bounds_hold(&self) -> bool {
        let eps = edge_count(self.n);
        let p = u64::from(self.p);
        self.total_u_plus() <= eps
            && self.total_u_minus() <= eps
            && self.total_b1() <= 4 * eps.saturating_sub(p)
            && self.total_b2() <= 4 * eps.saturating_sub(2 * p)
    }
}

/// Builds the index of `t` at magnitude `p`, for `1 <= p < ε`.
pub fn bad_pair_index(t: &EdgeLabeling, p: u32) -> Result<BadPairIndex> {
    let n = t.order();
    let eps = edge_count(n);
    if p < 1 || u64::from(p) >= eps {
        return Err(Error::InvalidParameter(format!(
            "bad pairs need 1 <= p < ε = {eps}, got p = {p}"
        )));
    }
    let inv = t.inverse();
    let edge_of = |x: Label| t.edge_at(inv[x as usize - 1]);
    let mut u_plus = vec![Vec::new(); n as usize];
    let mut u_minus = vec![Vec::new(); n as usize];
    let mut b1 = vec![0u32; eps as usize];
    let mut b2 = vec![0u32; eps as usize];
    for x in 1..=eps as Label {
        let e = edge_of(x);
        if u64::from(x + p) <= eps {
            let f = edge_of(x + p);
            if let Some(w) = common(e, f) {
                u_plus[w as usize - 1].push(e);
                u_minus[w as usize - 1].push(f);
            }
            for g in vertex_pairs(e, f) {
                b1[position(n, g.u, g.v)] += 1;
            }
        }
        if u64::from(x) + 2 * u64::from(p) <= eps {
            let f = edge_of(x + 2 * p);
            for g in vertex_pairs(e, f) {
                b2[position(n, g.u, g.v)] += 1;
            }
        }
    }
    for s in u_plus.iter_mut().chain(u_minus.iter_mut()) {
        s.sort_unstable();
    }
    Ok(BadPairIndex {
        n,
        p,
        u_plus,
        u_minus,
        b1,
        b2,
    })
}

/// The ordered pair minimising the score, ties broken lexicographically.
pub fn select_pair(t: &EdgeLabeling, p: u32) -> Result<(Vertex, Vertex, u64)> {
    let idx = bad_pair_index(t, p)?;
    select_from(&idx)
}

pub(crate) fn select_from(idx: &BadPairIndex) -> Result<(Vertex, Vertex, u64)> {
    let n = idx.n;
    let mut best: Option<(Vertex, Vertex, u64)> = None;
    for u in 1..=n {
        for v in 1..=n {
            if u == v {
                continue;
            }
            let s = idx.score(u, v);
            if best.is_none_or(|b| s < b.2) {
                best = Some((u, v, s));
            }
        }
    }
    best.ok_or_else(|| Error::Degenerate(format!("K_{n} has no vertex pair")))
}

//! Complete graphs, canonical edge indexing and edge labelings.
//!
//! Vertices of `K_n` are `1..=n`. Edges are unordered pairs `{u, v}` stored
//! with `u < v` and indexed lexicographically, so `{1, 2}` is edge 1 and
//! `{n-1, n}` is edge `n(n-1)/2`. A labeling stores one label per canonical
//! position; position `k` (0-based) holds the label of edge index `k + 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = u32;
pub type Label = u32;

/// Number of edges of `K_n`.
pub fn edge_count(n: u32) -> u64 {
    let n = u64::from(n);
    n * n.saturating_sub(1) / 2
}

/// Canonical 1-based index of `{u, v}` in `K_n`.
pub fn edge_index(n: u32, u: Vertex, v: Vertex) -> Result<u64> {
    if u == 0 || u >= v || v > n {
        return Err(Error::InvalidEdge { n, u, v });
    }
    let (n, u, v) = (u64::from(n), u64::from(u), u64::from(v));
    Ok((u - 1) * (2 * n - u) / 2 + (v - u))
}

/// Inverse of [`edge_index`].
pub fn edge_pair(n: u32, index: u64) -> Result<Edge> {
    let eps = edge_count(n);
    if index == 0 || index > eps {
        return Err(Error::IndexOutOfRange { index, eps });
    }
    let mut rest = index;
    for u in 1..n {
        let row = u64::from(n - u);
        if rest <= row {
            return Ok(Edge::new(u, u + rest as u32));
        }
        rest -= row;
    }
    unreachable!("index {index} checked against edge count {eps}")
}

#[inline]
pub(crate) fn position(n: u32, u: Vertex, v: Vertex) -> usize {
    debug_assert!(0 < u && u < v && v <= n);
    let (n, u, v) = (n as usize, u as usize, v as usize);
    (u - 1) * (2 * n - u) / 2 + (v - u) - 1
}

/// An edge `{u, v}` with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    /// Builds an edge from either endpoint order.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        debug_assert_ne!(a, b);
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn contains(&self, w: Vertex) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint that is not `w`.
    pub fn other(&self, w: Vertex) -> Vertex {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{}, {}}}", self.u, self.v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompleteGraph {
    n: u32,
}

impl CompleteGraph {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("K_n needs n >= 1".into()));
        }
        Ok(CompleteGraph { n })
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> u64 {
        edge_count(self.n)
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> {
        let n = self.n;
        (1..n).flat_map(move |u| (u + 1..=n).map(move |v| Edge { u, v }))
    }

    /// 0-based canonical positions of the edges at `v`, ordered by the other endpoint.
    pub fn incident_positions(&self, v: Vertex) -> impl Iterator<Item = usize> {
        let n = self.n;
        (1..=n).filter(move |&w| w != v).map(move |w| {
            if w < v {
                position(n, w, v)
            } else {
                position(n, v, w)
            }
        })
    }
}

/// A bijection from the edges of `K_n` onto `[1, ε]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    n: u32,
    values: Vec<Label>,
}

impl EdgeLabeling {
    /// Wraps canonical-order labels, checking bijectivity.
    pub fn from_values(n: u32, values: Vec<Label>) -> Result<Self> {
        CompleteGraph::new(n)?;
        let eps = edge_count(n);
        if values.len() as u64 != eps {
            return Err(Error::NotBijection {
                eps,
                detail: format!("{} labels given", values.len()),
            });
        }
        let mut seen = vec![false; values.len()];
        for (k, &x) in values.iter().enumerate() {
            if x == 0 || u64::from(x) > eps {
                let e = edge_pair(n, k as u64 + 1)?;
                return Err(Error::NotBijection {
                    eps,
                    detail: format!("label {x} on edge {e} is out of range"),
                });
            }
            let slot = &mut seen[x as usize - 1];
            if *slot {
                return Err(Error::NotBijection {
                    eps,
                    detail: format!("label {x} appears more than once"),
                });
            }
            *slot = true;
        }
        Ok(EdgeLabeling { n, values })
    }

    /// Builds a labeling from a function of the edge, checking bijectivity.
    pub fn from_fn(n: u32, mut f: impl FnMut(Vertex, Vertex) -> Label) -> Result<Self> {
        let g = CompleteGraph::new(n)?;
        let values = g.edges().map(|e| f(e.u, e.v)).collect();
        Self::from_values(n, values)
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn graph(&self) -> CompleteGraph {
        CompleteGraph { n: self.n }
    }

    pub fn edge_count(&self) -> u64 {
        self.values.len() as u64
    }

    /// Labels in canonical edge order.
    pub fn values(&self) -> &[Label] {
        &self.values
    }

    /// Label of `{a, b}` (either order). Panics if the pair is not an edge.
    pub fn label(&self, a: Vertex, b: Vertex) -> Label {
        let e = Edge::new(a, b);
        assert!(
            e.u >= 1 && e.v <= self.n,
            "{e} is not an edge of K_{}",
            self.n
        );
        self.values[position(self.n, e.u, e.v)]
    }

    pub fn get(&self, a: Vertex, b: Vertex) -> Option<Label> {
        if a == b || a == 0 || b == 0 || a > self.n || b > self.n {
            return None;
        }
        Some(self.label(a, b))
    }

    pub fn position_of(&self, e: Edge) -> usize {
        position(self.n, e.u, e.v)
    }

    pub fn edge_at(&self, position: usize) -> Edge {
        edge_pair(self.n, position as u64 + 1).expect("position within range")
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, Label)> + '_ {
        self.graph().edges().zip(self.values.iter().copied())
    }

    /// `inv[x - 1]` is the canonical position of the edge labelled `x`.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.values.len()];
        for (k, &x) in self.values.iter().enumerate() {
            inv[x as usize - 1] = k;
        }
        inv
    }

    /// Sorted labels on the edges at `v`.
    pub fn label_set(&self, v: Vertex) -> Vec<Label> {
        let mut s: Vec<Label> = self
            .graph()
            .incident_positions(v)
            .map(|k| self.values[k])
            .collect();
        s.sort_unstable();
        s
    }

    /// Applies a vertex permutation: `perm[v - 1]` is the new name of `v`.
    pub fn relabel_vertices(&self, perm: &[Vertex]) -> Result<Self> {
        let n = self.n;
        if perm.len() != n as usize {
            return Err(Error::InvalidParameter(format!(
                "vertex permutation has {} entries, need {n}",
                perm.len()
            )));
        }
        let mut seen = vec![false; n as usize];
        for &w in perm {
            if w == 0 || w > n || std::mem::replace(&mut seen[w as usize - 1], true) {
                return Err(Error::InvalidParameter("not a vertex permutation".into()));
            }
        }
        let mut values = vec![0; self.values.len()];
        for (e, x) in self.iter() {
            let f = Edge::new(perm[e.u as usize - 1], perm[e.v as usize - 1]);
            values[position(n, f.u, f.v)] = x;
        }
        Ok(EdgeLabeling { n, values })
    }
}

/// `s(t, v)` for every vertex; entry `v - 1` belongs to vertex `v`.
pub fn vertex_sums(t: &EdgeLabeling) -> Vec<i64> {
    let n = t.n;
    let mut sums = vec![0i64; n as usize];
    let mut k = 0;
    for u in 1..n {
        for v in u + 1..=n {
            let x = i64::from(t.values[k]);
            sums[u as usize - 1] += x;
            sums[v as usize - 1] += x;
            k += 1;
        }
    }
    sums
}

/// Largest pairwise difference of vertex sums; zero exactly for supermagic labelings.
pub fn alpha_of(t: &EdgeLabeling) -> i64 {
    spread(&vertex_sums(t))
}

pub(crate) fn spread(sums: &[i64]) -> i64 {
    match (sums.iter().max(), sums.iter().min()) {
        (Some(hi), Some(lo)) => hi - lo,
        _ => 0,
    }
}

/// A labeling together with a relabeling of the same graph, moved by at most `p` per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapRecord {
    pub base: EdgeLabeling,
    pub swapped: EdgeLabeling,
    pub p: u32,
}

impl SwapRecord {
    /// Validates and wraps a p-swap.
    pub fn new(base: EdgeLabeling, swapped: EdgeLabeling, p: u32) -> Result<Self> {
        let rec = SwapRecord { base, swapped, p };
        rec.validate()?;
        Ok(rec)
    }

    pub fn identity(base: EdgeLabeling) -> Self {
        SwapRecord {
            swapped: base.clone(),
            base,
            p: 0,
        }
    }

    /// Re-checks bijectivity of the swapped labeling and the per-edge displacement bound.
    pub fn validate(&self) -> Result<()> {
        if self.base.n != self.swapped.n {
            return Err(Error::OrderMismatch {
                expected: self.base.n,
                found: self.swapped.n,
            });
        }
        EdgeLabeling::from_values(self.swapped.n, self.swapped.values.clone())?;
        if let Some((k, d)) = self.displacements().enumerate().find(|&(_, d)| d > self.p) {
            return Err(Error::InvalidParameter(format!(
                "edge {} moves by {d} > p = {}",
                self.base.edge_at(k),
                self.p
            )));
        }
        Ok(())
    }

    pub fn displacements(&self) -> impl Iterator<Item = u32> + '_ {
        self.base
            .values
            .iter()
            .zip(&self.swapped.values)
            .map(|(&a, &b)| a.abs_diff(b))
    }

    pub fn max_displacement(&self) -> u32 {
        self.displacements().max().unwrap_or(0)
    }

    pub fn moved_edges(&self) -> usize {
        self.displacements().filter(|&d| d > 0).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> EdgeLabeling {
        EdgeLabeling::from_values(3, vec![1, 2, 3]).unwrap()
    }

    #[test]
    fn edge_index_examples() {
        assert_eq!(edge_index(6, 1, 2).unwrap(), 1);
        assert_eq!(edge_index(6, 1, 6).unwrap(), 5);
        assert_eq!(edge_index(6, 5, 6).unwrap(), 15);
        assert_eq!(edge_pair(6, 15).unwrap(), Edge::new(5, 6));
    }

    #[test]
    fn edge_index_rejects_bad_pairs() {
        assert!(matches!(
            edge_index(6, 3, 3),
            Err(Error::InvalidEdge { .. })
        ));
        assert!(edge_index(6, 4, 2).is_err());
        assert!(edge_index(6, 0, 2).is_err());
        assert!(edge_index(6, 2, 7).is_err());
        assert!(edge_pair(6, 0).is_err());
        assert!(edge_pair(6, 16).is_err());
    }

    #[test]
    fn k3_sums_and_alpha() {
        let t = k3();
        assert_eq!(vertex_sums(&t), vec![3, 4, 5]);
        assert_eq!(alpha_of(&t), 2);
        assert_eq!(t.label(3, 1), 2);
        assert_eq!(t.label_set(2), vec![1, 3]);
    }

    #[test]
    fn from_values_rejects_duplicates_and_zero() {
        let dup = EdgeLabeling::from_values(3, vec![1, 1, 3]).unwrap_err();
        assert!(dup.to_string().contains("not a bijection"));
        assert!(EdgeLabeling::from_values(3, vec![0, 1, 2]).is_err());
        assert!(EdgeLabeling::from_values(3, vec![1, 2, 4]).is_err());
        assert!(EdgeLabeling::from_values(3, vec![1, 2]).is_err());
    }

    #[test]
    fn swap_record_checks_magnitude() {
        let base = k3();
        let swapped = EdgeLabeling::from_values(3, vec![2, 1, 3]).unwrap();
        assert!(SwapRecord::new(base.clone(), swapped.clone(), 1).is_ok());
        let far = EdgeLabeling::from_values(3, vec![3, 2, 1]).unwrap();
        assert!(SwapRecord::new(base.clone(), far.clone(), 1).is_err());
        let rec = SwapRecord::new(base, far, 2).unwrap();
        assert_eq!(rec.max_displacement(), 2);
        assert_eq!(rec.moved_edges(), 2);
    }

    #[test]
    fn incident_positions_match_labels() {
        let t = EdgeLabeling::from_fn(5, |u, v| edge_index(5, u, v).unwrap() as Label).unwrap();
        let g = t.graph();
        for v in 1..=5 {
            let mut via_pos: Vec<_> = g.incident_positions(v).map(|k| t.values()[k]).collect();
            via_pos.sort_unstable();
            assert_eq!(via_pos, t.label_set(v));
        }
    }
}

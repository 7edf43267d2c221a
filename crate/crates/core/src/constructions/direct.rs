//! Direct labelings of `K_{8q}`: `τ_{8q}` and the astray-good `T_{8q}`.
//!
//! Vertices `1..=4q` are `v_1..v_{4q}` and `4q+1..=8q` are `u_1..u_{4q}`.
//! The factors are
//! * `G_1`: the bipartite edges `u_i v_j`, labelled from the weaving square
//!   with `u_i` as the row;
//! * `G_3`: the matching `{2k-1, 2k}` for `k in 1..=4q`, in canonical order;
//! * `G_2`: everything else, two cocktail-party graphs `H` (on the `v`) and
//!   `H'` (on the `u`).

use crate::constructions::cocktail::{supermagic_cocktail, CocktailLabeling, DEFAULT_BUDGET};
use crate::constructions::AstrayLabeling;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeLabeling, Label, Vertex};
use crate::squares::weaving_entry;

/// Supermagic labeling of `G_2`, built from two copies of a cocktail labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarT {
    pub q: u32,
    /// Edge count of one copy, `8q^2 - 4q`.
    pub half: u32,
    /// Labels on `G_2` edges, canonical order over `K_{8q}`.
    pub edges: Vec<(Edge, Label)>,
}

impl BarT {
    pub fn vertex_sums(&self) -> Vec<u64> {
        let mut sums = vec![0u64; 8 * self.q as usize];
        for &(e, x) in &self.edges {
            sums[e.u as usize - 1] += u64::from(x);
            sums[e.v as usize - 1] += u64::from(x);
        }
        sums
    }

    /// Counts of low (`<= half`) and high labels at `v`.
    pub fn split(&self, v: Vertex) -> (usize, usize) {
        let at_v = self.edges.iter().filter(|(e, _)| e.contains(v));
        let low = at_v.clone().filter(|&&(_, x)| x <= self.half).count();
        (low, at_v.count() - low)
    }

    fn lookup(&self) -> std::collections::HashMap<Edge, Label> {
        self.edges.iter().copied().collect()
    }
}

fn check_q(q: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "K_{{8q}} constructions need q >= 2, got {q}"
        )));
    }
    Ok(())
}

/// `u_i` as a vertex number.
fn u(q: u32, i: u32) -> Vertex {
    4 * q + i
}

/// Whether `e` lies in `F_1` (same parity endpoints) of its cocktail copy.
fn in_f1(e: Edge) -> bool {
    e.u % 2 == e.v % 2
}

pub fn bar_t_from(c: &CocktailLabeling) -> BarT {
    let q = c.q();
    let half = c.edge_count() as Label;
    let mut edges = Vec::with_capacity(2 * half as usize);
    for (e, x) in c.iter() {
        edges.push((e, if in_f1(e) { x } else { x + half }));
    }
    for (e, x) in c.iter() {
        let f = Edge::new(u(q, e.u), u(q, e.v));
        edges.push((f, if in_f1(e) { x + half } else { x }));
    }
    edges.sort_unstable();
    BarT { q, half, edges }
}

pub fn bar_t(q: u32, budget: u64) -> Result<BarT> {
    check_q(q)?;
    Ok(bar_t_from(&supermagic_cocktail(q, budget)?))
}

/// The three-block labeling `τ_{8q}`.
pub fn tau(q: u32, budget: u64) -> Result<EdgeLabeling> {
    check_q(q)?;
    let bar = bar_t(q, budget)?.lookup();
    let n = 8 * q;
    EdgeLabeling::from_fn(n, |a, b| {
        let e = Edge::new(a, b);
        if let Some(i) = matching_index(e) {
            32 * q * q - 8 * q + i
        } else if e.u <= 4 * q && e.v > 4 * q {
            weaving_entry(q, e.v - 4 * q, e.u)
        } else {
            bar[&e] + 16 * q * q
        }
    })
}

/// `k` when `e` is the `k`-th matching edge `{2k-1, 2k}`.
fn matching_index(e: Edge) -> Option<u32> {
    (e.u % 2 == 1 && e.v == e.u + 1).then_some(e.v / 2)
}

/// The 1-astray good labeling `T_{8q}` with astray part `G_3`.
pub fn t8q(q: u32) -> Result<AstrayLabeling> {
    check_q(q)?;
    t8q_with(&supermagic_cocktail(q, DEFAULT_BUDGET)?)
}

pub fn t8q_with(c: &CocktailLabeling) -> Result<AstrayLabeling> {
    let q = c.q();
    check_q(q)?;
    let bar = bar_t_from(c);
    let half = bar.half;
    let bar = bar.lookup();
    let n = 8 * q;
    let (qq, big) = (q * q, 8 * q * q);
    let t = EdgeLabeling::from_fn(n, |a, b| {
        let e = Edge::new(a, b);
        if let Some(k) = matching_index(e) {
            16 * qq - 4 * q + k
        } else if e.u <= 4 * q && e.v > 4 * q {
            let w = weaving_entry(q, e.v - 4 * q, e.u);
            if w <= big {
                w + 8 * qq - 4 * q
            } else {
                w + 8 * qq
            }
        } else {
            let x = bar[&e];
            if x <= half {
                x
            } else {
                x + 16 * qq + 4 * q
            }
        }
    })?;
    let astray = (1..=4 * q).map(|k| Edge::new(2 * k - 1, 2 * k)).collect();
    AstrayLabeling::seal(t, astray, 1)
}

//! Exact robustness by banded assignment, one solve per ordered vertex pair.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{edge_count, vertex_sums, Edge, EdgeLabeling, Label, SwapRecord, Vertex};
use crate::robustness::assignment::banded_max;

/// Largest edge count the oracle accepts unless told otherwise (`K_15`).
pub const DEFAULT_CAP: u64 = 105;

/// The worst `p`-swap found by [`exact_robustness`].
#[derive(Clone, Debug)]
pub struct Exact {
    /// `R(p, t, n)`.
    pub r: i64,
    pub u: Vertex,
    pub v: Vertex,
    /// A swap attaining `s(θt, u) - s(θt, v) = r`.
    pub swap: SwapRecord,
}

fn check_cap(t: &EdgeLabeling, cap: u64) -> Result<()> {
    let eps = t.edge_count();
    if eps > cap {
        return Err(Error::CapExceeded { eps, cap });
    }
    Ok(())
}

/// Maximises `Σ c(e)·θt(e)` over `p`-swaps `θ`, with `c` given per canonical
/// edge position. Returns the optimum and the swapped labels.
pub fn optimise(t: &EdgeLabeling, p: u32, coeff: &[i64]) -> (i64, Vec<Label>) {
    let inv = t.inverse();
    let len = inv.len();
    let c: Vec<i64> = inv.iter().map(|&k| coeff[k]).collect();
    let (value, perm) = banded_max(len, p as usize, |x, y| c[x] * (y as i64 + 1));
    let mut values = vec![0; len];
    for (x, &y) in perm.iter().enumerate() {
        values[inv[x]] = y as Label + 1;
    }
    (value, values)
}

/// `+1` on `D(u) \ D(v)`, `-1` on `D(v) \ D(u)`, `0` elsewhere.
fn pair_coefficients(t: &EdgeLabeling, u: Vertex, v: Vertex) -> Vec<i64> {
    let g = t.graph();
    let mut c = vec![0i64; t.edge_count() as usize];
    for k in g.incident_positions(u) {
        c[k] += 1;
    }
    for k in g.incident_positions(v) {
        c[k] -= 1;
    }
    c
}

/// Largest `s(θt, u) - s(θt, v)` over `p`-swaps, with the swap attaining it.
pub fn pair_optimum(t: &EdgeLabeling, p: u32, u: Vertex, v: Vertex) -> (i64, Vec<Label>) {
    optimise(t, p, &pair_coefficients(t, u, v))
}

/// `R(p, t, n)`: the largest vertex-sum gap any `p`-swap can open.
///
/// Refuses labelings with more than `cap` edges. Pairs are solved in
/// parallel; the winner is the largest value, then the smallest `(u, v)`.
pub fn exact_robustness(t: &EdgeLabeling, p: u32, cap: u64) -> Result<Exact> {
    check_cap(t, cap)?;
    let n = t.order();
    if n < 2 {
        return Err(Error::Degenerate(
            "robustness needs at least two vertices".into(),
        ));
    }
    let pairs: Vec<(Vertex, Vertex)> = (1..=n)
        .flat_map(|u| (1..=n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let values: Vec<i64> = pairs
        .par_iter()
        .map(|&(u, v)| pair_optimum(t, p, u, v).0)
        .collect();
    let (k, &r) = values
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .expect("at least one pair");
    let (u, v) = pairs[k];
    let (value, labels) = pair_optimum(t, p, u, v);
    debug_assert_eq!(value, r);
    let swap = SwapRecord::new(t.clone(), EdgeLabeling::from_values(n, labels)?, p)?;
    Ok(Exact { r, u, v, swap })
}

/// Smallest and largest change of `s(t, F)` over all `p`-swaps, for an edge
/// set `F` whose labels are consecutive and at least `2p` in number.
pub fn block_shift_extremes(t: &EdgeLabeling, f: &[Edge], p: u32, cap: u64) -> Result<(i64, i64)> {
    check_cap(t, cap)?;
    let mut labels = Vec::with_capacity(f.len());
    let mut coeff = vec![0i64; t.edge_count() as usize];
    for &e in f {
        let x = t.get(e.u, e.v).ok_or_else(|| {
            Error::InvalidParameter(format!("{e} is not an edge of K_{}", t.order()))
        })?;
        let k = t.position_of(e);
        if coeff[k] != 0 {
            return Err(Error::InvalidParameter(format!("{e} is listed twice")));
        }
        coeff[k] = 1;
        labels.push(x);
    }
    if f.is_empty() || (f.len() as u64) < 2 * u64::from(p) {
        return Err(Error::InvalidParameter(format!(
            "block has {} edges, need at least max(1, 2p) = {}",
            f.len(),
            (2 * p).max(1)
        )));
    }
    labels.sort_unstable();
    if labels.windows(2).any(|w| w[1] != w[0] + 1) {
        return Err(Error::InvalidParameter(
            "block labels are not consecutive".into(),
        ));
    }
    let base: i64 = labels.iter().map(|&x| i64::from(x)).sum();
    let (hi, _) = optimise(t, p, &coeff);
    coeff.iter_mut().for_each(|c| *c = -*c);
    let (lo, _) = optimise(t, p, &coeff);
    Ok((-lo - base, hi - base))
}

/// Edge sets at `v` of every length-`len` window of consecutive labels that
/// `v` sees and that stays at least `p` away from both ends of `[ε]`.
pub fn interior_blocks(t: &EdgeLabeling, v: Vertex, len: u32, p: u32) -> Vec<Vec<Edge>> {
    let eps = edge_count(t.order()) as Label;
    let set = t.label_set(v);
    let inv = t.inverse();
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    for w in set.windows(len as usize) {
        let (x, y) = (w[0], w[len as usize - 1]);
        if y - x + 1 == len && x > p && y + p <= eps {
            out.push(w.iter().map(|&z| t.edge_at(inv[z as usize - 1])).collect());
        }
    }
    out
}

/// `max |s(θt, u) - s(θt, v)|` for a given swap, over all vertex pairs.
pub fn swap_discrepancy(swap: &SwapRecord) -> i64 {
    let s = vertex_sums(&swap.swapped);
    s.iter().max().copied().unwrap_or(0) - s.iter().min().copied().unwrap_or(0)
}

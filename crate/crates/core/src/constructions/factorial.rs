//! Labelings that give every 1-factor of a 1-factorization its own label interval.
//!
//! Such labelings meet every interval exactly once at every vertex, which
//! makes them easy to perturb; they serve as the comparison baseline.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{edge_count, position, Edge, EdgeLabeling, Label, Vertex};

/// The cyclic supermagic labeling of `K_{4s+2}`.
///
/// Vertices `0..4s` of `Z_{4s+1}` are numbered `1..=4s+1` and `∞` is `4s+2`.
/// Factor `i` pairs `i+d` with `i-d` for `d` in `1..=2s` plus `{∞, i}` and
/// uses labels `i(2s+1) + 1 ..= (i+1)(2s+1)`.
pub fn factorial_baseline(s: u32) -> Result<EdgeLabeling> {
    if s < 1 {
        return Err(Error::InvalidParameter(
            "factorial baseline needs s >= 1".into(),
        ));
    }
    let m = 4 * s + 1;
    let n = m + 1;
    let width = 2 * s + 1;
    let mut values = vec![0; edge_count(n) as usize];
    let vertex = |z: u32| z % m + 1;
    for i in 0..m {
        let off = i * width;
        values[position(n, vertex(i), n)] = s + 1 + off;
        for d in 1..=2 * s {
            let e = Edge::new(vertex(i + d), vertex(i + m - d));
            let x = if d <= s { d } else { d + 1 };
            values[position(n, e.u, e.v)] = x + off;
        }
    }
    EdgeLabeling::from_values(n, values)
}

/// Round-robin 1-factorization of `K_n` for even `n`.
///
/// Factor `i` (0-based) holds `{∞, i}` and `{i+d, i-d}` over `Z_{n-1}`, with
/// `∞ = n` and residue `z` numbered `z + 1`.
pub fn round_robin(n: u32) -> Result<Vec<Vec<Edge>>> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "round robin needs an even order, got {n}"
        )));
    }
    let m = n - 1;
    let vertex = |z: u32| z % m + 1;
    Ok((0..m)
        .map(|i| {
            let mut f = vec![Edge::new(vertex(i), n)];
            f.extend((1..=m / 2).map(|d| Edge::new(vertex(i + d), vertex(i + m - d))));
            f
        })
        .collect())
}

/// A near-supermagic labeling of even-order `K_n` where factor `i` of the
/// round-robin factorization owns the labels `i·n/2 + 1 ..= (i+1)·n/2`.
///
/// Labels are first placed cyclically, then swapped inside factors by a
/// seeded local search that pulls vertex sums towards their mean. Swaps never
/// leave a factor, so every vertex still sees one label per interval.
pub fn factorial_style(n: u32, seed: u64, budget: u64) -> Result<EdgeLabeling> {
    let factors = round_robin(n)?;
    if n < 4 {
        return Err(Error::InvalidParameter(
            "factorial-style labeling needs n >= 4".into(),
        ));
    }
    let half = n / 2;
    let f0 = (n + 2) / 4;
    let mut at: Vec<Vec<(Vertex, Vertex)>> = Vec::new();
    let mut labels: Vec<Vec<Label>> = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        let off = i as Label * half;
        at.push(f.iter().map(|e| (e.u, e.v)).collect());
        let mut row = vec![f0 + off];
        row.extend((1..half).map(|d| if d < f0 { d + off } else { d + 1 + off }));
        labels.push(row);
    }

    let nu = n as usize;
    let eps = edge_count(n) as i64;
    let target = (i64::from(n) - 1) * (eps + 1);
    let mut dev = vec![-target; nu];
    for (f, row) in at.iter().zip(&labels) {
        for (&(a, b), &x) in f.iter().zip(row) {
            dev[a as usize - 1] += 2 * i64::from(x);
            dev[b as usize - 1] += 2 * i64::from(x);
        }
    }
    let floor = target.rem_euclid(2);
    let excess = |dev: &[i64]| -> i64 { dev.iter().map(|d| d * d - floor).sum() };
    let mut energy = excess(&dev);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut temp = 4.0f64;
    for step in 0..budget {
        if energy == 0 {
            break;
        }
        if step % 10_000 == 9_999 {
            temp = (temp * 0.9).max(0.5);
        }
        let i = rng.gen_range(0..at.len());
        let (j, k) = (
            rng.gen_range(0..half as usize),
            rng.gen_range(0..half as usize),
        );
        if j == k {
            continue;
        }
        let (e, f) = (at[i][j], at[i][k]);
        let d = 2 * (i64::from(labels[i][k]) - i64::from(labels[i][j]));
        let mut touched = [(e.0, d), (e.1, d), (f.0, -d), (f.1, -d)];
        touched.sort_unstable_by_key(|t| t.0);
        let mut de = 0;
        for t in &touched {
            let v = t.0 as usize - 1;
            de += (dev[v] + t.1).pow(2) - dev[v].pow(2);
        }
        // Endpoints of two edges in one factor are distinct, so no vertex repeats.
        if de <= 0 || rng.gen::<f64>() < (-(de as f64) / (8.0 * temp)).exp() {
            labels[i].swap(j, k);
            for t in &touched {
                dev[t.0 as usize - 1] += t.1;
            }
            energy += de;
        }
    }

    let mut values = vec![0; eps as usize];
    for (f, row) in at.iter().zip(&labels) {
        for (&(a, b), &x) in f.iter().zip(row) {
            let e = Edge::new(a, b);
            values[position(n, e.u, e.v)] = x;
        }
    }
    EdgeLabeling::from_values(n, values)
}

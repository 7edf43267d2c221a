//! Independent reference computations shared by the integration tests.
//!
//! Nothing here calls into the assignment solver; these are the oracles it
//! is checked against.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use swapmagic::{edge_index, Edge, EdgeLabeling, Label};

/// Label sums straight from the definition.
pub fn sums_by_definition(t: &EdgeLabeling) -> Vec<i64> {
    let n = t.order();
    (1..=n)
        .map(|v| {
            (1..=n)
                .filter(|&w| w != v)
                .map(|w| i64::from(t.label(v, w)))
                .sum()
        })
        .collect()
}

/// Largest vertex-sum spread over every `p`-swap, by listing every
/// permutation of `[ε]` that moves no label by more than `p`.
pub fn brute_force_r(t: &EdgeLabeling, p: u32) -> i64 {
    let n = t.order() as usize;
    let eps = t.edge_count() as usize;
    // Endpoints of the edge that carries label x (0-based) under t.
    let mut ends = vec![(0usize, 0usize); eps];
    for (e, x) in t.iter() {
        ends[x as usize - 1] = (e.u as usize - 1, e.v as usize - 1);
    }
    struct State<'a> {
        p: usize,
        ends: &'a [(usize, usize)],
        used: Vec<bool>,
        sums: Vec<i64>,
        best: i64,
    }
    fn go(s: &mut State, x: usize) {
        let eps = s.used.len();
        if x == eps {
            let hi = *s.sums.iter().max().unwrap();
            let lo = *s.sums.iter().min().unwrap();
            s.best = s.best.max(hi - lo);
            return;
        }
        // The label x - p must be taken by now or never.
        if x > s.p && !s.used[x - s.p - 1] {
            return;
        }
        let (a, b) = s.ends[x];
        for y in x.saturating_sub(s.p)..=(x + s.p).min(eps - 1) {
            if s.used[y] {
                continue;
            }
            s.used[y] = true;
            s.sums[a] += y as i64 + 1;
            s.sums[b] += y as i64 + 1;
            go(s, x + 1);
            s.sums[a] -= y as i64 + 1;
            s.sums[b] -= y as i64 + 1;
            s.used[y] = false;
        }
    }
    let mut s = State {
        p: p as usize,
        ends: &ends,
        used: vec![false; eps],
        sums: vec![0; n],
        best: i64::MIN,
    };
    go(&mut s, 0);
    s.best
}

/// The same quantity by dynamic programming over the label line: for each
/// ordered pair, the state after placing labels `1..=x` is the set of used
/// slots in the window `[x - p, x + p]`.
pub fn frontier_r(t: &EdgeLabeling, p: u32) -> i64 {
    let n = t.order();
    let eps = t.edge_count() as usize;
    let p = p as usize;
    let width = 2 * p + 1;
    let mut best = i64::MIN;
    let mut owner = vec![Edge { u: 0, v: 0 }; eps];
    for (e, x) in t.iter() {
        owner[x as usize - 1] = e;
    }
    for u in 1..=n {
        for v in 1..=n {
            if u == v {
                continue;
            }
            let coeff: Vec<i64> = owner
                .iter()
                .map(|e| i64::from(e.contains(u)) - i64::from(e.contains(v)))
                .collect();
            // mask bit k: slot x - p + k is used, before item x is placed.
            let mut dp = vec![i64::MIN; 1 << width];
            dp[0] = 0;
            for (x, &c) in coeff.iter().enumerate() {
                let mut next = vec![i64::MIN; 1 << width];
                for (mask, &val) in dp.iter().enumerate() {
                    if val == i64::MIN {
                        continue;
                    }
                    for k in 0..width {
                        if mask & (1 << k) != 0 {
                            continue;
                        }
                        let slot = x as i64 - p as i64 + k as i64;
                        if slot < 0 || slot >= eps as i64 {
                            continue;
                        }
                        let m = mask | (1 << k);
                        // Slot x - p leaves the window next; it must be filled.
                        if x >= p && m & 1 == 0 {
                            continue;
                        }
                        let shifted = m >> 1;
                        let gain = c * (slot + 1);
                        let cell = &mut next[shifted];
                        *cell = (*cell).max(val + gain);
                    }
                }
                dp = next;
            }
            let full = dp.iter().copied().max().unwrap();
            best = best.max(full);
        }
    }
    best
}

/// A labeling with labels in canonical edge order.
pub fn canonical(n: u32) -> EdgeLabeling {
    EdgeLabeling::from_fn(n, |u, v| edge_index(n, u, v).unwrap() as Label).unwrap()
}

/// A seeded uniformly shuffled labeling.
pub fn shuffled(n: u32, seed: u64) -> EdgeLabeling {
    let eps = (n * (n - 1) / 2) as Label;
    let mut labels: Vec<Label> = (1..=eps).collect();
    labels.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    EdgeLabeling::from_values(n, labels).unwrap()
}

/// Labels reversed against canonical order.
pub fn reversed(n: u32) -> EdgeLabeling {
    let eps = n * (n - 1) / 2;
    EdgeLabeling::from_fn(n, |u, v| eps + 1 - edge_index(n, u, v).unwrap() as Label).unwrap()
}

/// A seeded vertex permutation of `t`.
pub fn permuted(t: &EdgeLabeling, seed: u64) -> EdgeLabeling {
    let mut perm: Vec<u32> = (1..=t.order()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    t.relabel_vertices(&perm).unwrap()
}

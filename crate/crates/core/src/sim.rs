//! Popularity drift on a fractional-repetition layout.
//!
//! Servers are vertices, items are edges and labels are popularity ranks.
//! Ranks drift by random transpositions of nearby labels; no item ever ends
//! more than `p` ranks from where it started. The walk does not sample
//! `p`-swaps uniformly, it only guarantees that every state is a valid one.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{vertex_sums, EdgeLabeling, Label, SwapRecord, Vertex};
use crate::robustness::{best_drift_bound, DriftCertificate};

/// Transposition attempts per edge used by [`sample_p_swap`].
pub const STEPS_PER_EDGE: u64 = 4;

/// A labeling drifting away from a fixed base by at most `p` per edge.
#[derive(Clone, Debug)]
pub struct Drift {
    base: EdgeLabeling,
    p: u32,
    current: Vec<Label>,
    /// `inv[x - 1]`: position currently holding label `x`.
    inv: Vec<usize>,
}

impl Drift {
    pub fn new(base: EdgeLabeling, p: u32) -> Self {
        let current = base.values().to_vec();
        let inv = base.inverse();
        Drift {
            base,
            p,
            current,
            inv,
        }
    }

    /// Tries one transposition; returns whether it was applied.
    pub fn step(&mut self, rng: &mut impl Rng) -> bool {
        if self.p == 0 || self.current.len() < 2 {
            return false;
        }
        let k = rng.gen_range(0..self.current.len());
        let d = rng.gen_range(1..=self.p);
        let x = self.current[k];
        let y = if rng.gen::<bool>() {
            x.checked_add(d)
        } else {
            x.checked_sub(d)
        };
        let Some(y) = y.filter(|&y| y >= 1 && y as usize <= self.current.len()) else {
            return false;
        };
        let j = self.inv[y as usize - 1];
        let base = self.base.values();
        if base[k].abs_diff(y) > self.p || base[j].abs_diff(x) > self.p {
            return false;
        }
        self.current.swap(k, j);
        self.inv[x as usize - 1] = j;
        self.inv[y as usize - 1] = k;
        true
    }

    pub fn max_displacement(&self) -> u32 {
        self.base
            .values()
            .iter()
            .zip(&self.current)
            .map(|(&a, &b)| a.abs_diff(b))
            .max()
            .unwrap_or(0)
    }

    pub fn labeling(&self) -> EdgeLabeling {
        EdgeLabeling::from_values(self.base.order(), self.current.clone())
            .expect("transpositions keep a bijection")
    }

    pub fn record(&self) -> Result<SwapRecord> {
        SwapRecord::new(self.base.clone(), self.labeling(), self.p)
    }
}

/// A seeded random `p`-swap of `t` from `4ε` transposition attempts.
pub fn sample_p_swap(t: &EdgeLabeling, p: u32, seed: u64) -> SwapRecord {
    let mut drift = Drift::new(t.clone(), p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..STEPS_PER_EDGE * t.edge_count() {
        drift.step(&mut rng);
    }
    drift
        .record()
        .expect("every accepted transposition respects p")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimConfig {
    pub epochs: u32,
    /// Transposition attempts per epoch.
    pub step_budget: u64,
    pub p: u32,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EpochRecord {
    pub epoch: u32,
    /// Largest minus smallest vertex sum.
    pub discrepancy: i64,
    /// First vertex with the largest sum.
    pub u: Vertex,
    /// First vertex with the smallest sum.
    pub v: Vertex,
    pub max_disp: u32,
}

#[derive(Clone, Debug)]
pub struct SimTrace {
    pub records: Vec<EpochRecord>,
    pub bound: DriftCertificate,
    pub final_swap: SwapRecord,
}

impl SimTrace {
    pub fn max_discrepancy(&self) -> i64 {
        self.records
            .iter()
            .map(|r| r.discrepancy)
            .max()
            .unwrap_or(0)
    }

    pub fn within_bound(&self) -> bool {
        self.max_discrepancy() <= self.bound.bound
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("epoch,discrepancy,u,v,max_disp\n");
        for r in &self.records {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.epoch, r.discrepancy, r.u, r.v, r.max_disp
            ));
        }
        out
    }
}

fn observe(epoch: u32, t: &EdgeLabeling, max_disp: u32) -> EpochRecord {
    let s = vertex_sums(t);
    let mut u = 0;
    let mut v = 0;
    for k in 0..s.len() {
        if s[k] > s[u] {
            u = k;
        }
        if s[k] < s[v] {
            v = k;
        }
    }
    EpochRecord {
        epoch,
        discrepancy: s[u] - s[v],
        u: u as Vertex + 1,
        v: v as Vertex + 1,
        max_disp,
    }
}

/// Drifts `t` for `cfg.epochs` epochs and records the spread after each.
///
/// The bound is the tightest drift bound certified by the run witness of
/// `t`; it holds for every state the walk can reach.
pub fn simulate(t: &EdgeLabeling, cfg: &SimConfig) -> Result<SimTrace> {
    if t.order() < 2 {
        return Err(Error::Degenerate(
            "simulation needs at least two servers".into(),
        ));
    }
    let bound = best_drift_bound(t, cfg.p)?;
    let mut drift = Drift::new(t.clone(), cfg.p);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut records = vec![observe(0, t, 0)];
    for epoch in 1..=cfg.epochs {
        for _ in 0..cfg.step_budget {
            drift.step(&mut rng);
        }
        let max_disp = drift.max_displacement();
        if max_disp > cfg.p {
            return Err(Error::Internal(format!(
                "epoch {epoch}: displacement {max_disp} exceeds p"
            )));
        }
        records.push(observe(epoch, &drift.labeling(), max_disp));
    }
    Ok(SimTrace {
        records,
        bound,
        final_swap: drift.record()?,
    })
}

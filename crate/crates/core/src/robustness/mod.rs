//! How far vertex sums can drift when every label moves by at most `p`.
//!
//! The attack gives a constructive lower bound, the assignment oracle the
//! exact value on small graphs, and the run-based drift bound an upper bound
//! from the labeling's structure.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{alpha_of, EdgeLabeling, SwapRecord, Vertex};

pub mod assignment;
pub mod attack;
pub mod bad_pairs;
pub mod bounds;
pub mod exact;
pub mod sweep;

pub use assignment::banded_max;
pub use attack::{attack, attack_pair, Attack, AttackSets};
pub use bad_pairs::{bad_pair_index, select_pair, BadPairIndex};
pub use bounds::{best_drift_bound, drift_bound, theorem_bounds, DriftCertificate};
pub use exact::{
    block_shift_extremes, exact_robustness, interior_blocks, pair_optimum, Exact, DEFAULT_CAP,
};
pub use sweep::{ratio_sweep, Family, PRule, SweepRow};

/// An edge whose label a swap changed: `[u, v, before, after]`.
pub type Move = [u64; 4];

fn moves(swap: &SwapRecord) -> Vec<Move> {
    swap.base
        .iter()
        .zip(swap.swapped.values())
        .filter(|((_, a), b)| a != *b)
        .map(|((e, a), &b)| [u64::from(e.u), u64::from(e.v), u64::from(a), u64::from(b)])
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AttackSummary {
    pub u: Vertex,
    pub v: Vertex,
    pub score: u64,
    pub discrepancy: i64,
    pub guarantee: i64,
    pub moves: Vec<Move>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactSummary {
    pub r: i64,
    pub u: Vertex,
    pub v: Vertex,
    pub moves: Vec<Move>,
}

/// Everything known about `R(p, t, n)` for one labeling and magnitude.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RobustnessReport {
    pub n: u32,
    pub p: u32,
    pub alpha: i64,
    /// Absent at `p = 0`, where the only swap is the identity.
    pub attack: Option<AttackSummary>,
    pub theorem_lower: i64,
    pub theorem_upper: i64,
    pub drift: DriftCertificate,
    pub exact: Option<ExactSummary>,
    /// Best known lower bound over `2pn`; a finite-`n` estimate only.
    pub ratio_lb: Option<f64>,
    pub ratio_exact: Option<f64>,
}

impl RobustnessReport {
    /// Largest lower bound on `R` the report establishes.
    pub fn best_lower(&self) -> i64 {
        let a = self.attack.as_ref().map_or(self.alpha, |a| a.discrepancy);
        a.max(self.alpha).max(self.theorem_lower)
    }

    /// Attack ≤ exact ≤ the smaller upper bound, where present.
    pub fn consistent(&self) -> bool {
        let upper = self.theorem_upper.min(self.drift.bound);
        let lower = self.best_lower();
        lower <= upper
            && self
                .exact
                .as_ref()
                .is_none_or(|x| lower <= x.r && x.r <= upper)
    }
}

/// Builds a report; with `cap` given the exact oracle runs too.
pub fn report(t: &EdgeLabeling, p: u32, cap: Option<u64>) -> Result<RobustnessReport> {
    let n = t.order();
    let alpha = alpha_of(t);
    let attack = if p == 0 {
        None
    } else {
        let a = attack::attack(t, p)?;
        Some(AttackSummary {
            u: a.u,
            v: a.v,
            score: a.score,
            discrepancy: a.discrepancy,
            guarantee: a.guarantee,
            moves: moves(&a.swap),
        })
    };
    let (theorem_lower, theorem_upper) = theorem_bounds(n, p, alpha);
    let drift = best_drift_bound(t, p)?;
    let exact = match cap {
        Some(cap) => {
            let x = exact_robustness(t, p, cap)?;
            Some(ExactSummary {
                r: x.r,
                u: x.u,
                v: x.v,
                moves: moves(&x.swap),
            })
        }
        None => None,
    };
    let scale = 2.0 * f64::from(p) * f64::from(n);
    let mut out = RobustnessReport {
        n,
        p,
        alpha,
        attack,
        theorem_lower,
        theorem_upper,
        drift,
        exact,
        ratio_lb: None,
        ratio_exact: None,
    };
    if p > 0 {
        out.ratio_lb = Some(out.best_lower() as f64 / scale);
        out.ratio_exact = out.exact.as_ref().map(|x| x.r as f64 / scale);
    }
    Ok(out)
}

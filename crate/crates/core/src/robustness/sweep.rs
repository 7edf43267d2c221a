//! Finite-`n` robustness tables over a construction family.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{factorial_baseline, factorial_style, pipeline, t8q};
use crate::error::{Error, Result};
use crate::graph::{alpha_of, EdgeLabeling};
use crate::robustness::{attack, best_drift_bound, exact_robustness, theorem_bounds};

/// A labeling family indexed by one integer parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Parameter `s`, order `4s + 2`.
    FactorialBaseline,
    /// Parameter `n` (even).
    FactorialStyle { seed: u64, budget: u64 },
    /// Parameter `q`, order `8q`.
    T8q,
    /// Parameter `n`.
    Pipeline { s: u32 },
}

impl Family {
    pub fn build(&self, param: u32) -> Result<EdgeLabeling> {
        match *self {
            Family::FactorialBaseline => factorial_baseline(param),
            Family::FactorialStyle { seed, budget } => factorial_style(param, seed, budget),
            Family::T8q => Ok(t8q(param)?.t),
            Family::Pipeline { s } => Ok(pipeline(param, s, None)?.t),
        }
    }
}

/// Magnitude as a function of the order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PRule {
    Const(u32),
    /// `⌈√n⌉`.
    SqrtCeil,
    /// `⌊n / d⌋`.
    Div(u32),
}

impl PRule {
    pub fn apply(&self, n: u32) -> u32 {
        match *self {
            PRule::Const(p) => p,
            PRule::SqrtCeil => {
                let mut r = (f64::from(n)).sqrt() as u32;
                while r * r < n {
                    r += 1;
                }
                while r > 0 && (r - 1) * (r - 1) >= n {
                    r -= 1;
                }
                r
            }
            PRule::Div(d) => n / d.max(1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub param: u32,
    pub n: u32,
    pub p: u32,
    pub alpha: i64,
    /// Discrepancy opened by the attack swap (the spread itself at `p = 0`).
    pub attack_lb: i64,
    pub exact: Option<i64>,
    /// The smaller of the sandwich upper end and the best drift bound.
    pub upper: i64,
    /// Best known lower bound over `2pn`.
    pub ratio_lb: Option<f64>,
    pub ratio_exact: Option<f64>,
    pub seconds: Option<f64>,
}

/// One row per parameter, in input order. Failed rows carry their error.
pub fn ratio_sweep(
    family: Family,
    params: &[u32],
    rule: PRule,
    cap: u64,
    timing: bool,
) -> Vec<Result<SweepRow>> {
    params
        .par_iter()
        .map(|&param| sweep_row(family, param, rule, cap, timing))
        .collect()
}

fn sweep_row(family: Family, param: u32, rule: PRule, cap: u64, timing: bool) -> Result<SweepRow> {
    let clock = Instant::now();
    let t = family.build(param)?;
    let n = t.order();
    let p = rule.apply(n);
    let alpha = alpha_of(&t);
    let attack_lb = if p == 0 {
        alpha
    } else {
        attack(&t, p)?.discrepancy
    };
    let (lower, sandwich) = theorem_bounds(n, p, alpha);
    let upper = sandwich.min(best_drift_bound(&t, p)?.bound);
    let exact = match exact_robustness(&t, p, cap) {
        Ok(x) => Some(x.r),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let scale = 2.0 * f64::from(p) * f64::from(n);
    let ratio = |x: i64| (p > 0).then(|| x as f64 / scale);
    let best_lb = attack_lb.max(lower).max(alpha);
    Ok(SweepRow {
        param,
        n,
        p,
        alpha,
        attack_lb,
        exact,
        upper,
        ratio_lb: ratio(best_lb),
        ratio_exact: exact.and_then(ratio),
        seconds: timing.then(|| clock.elapsed().as_secs_f64()),
    })
}

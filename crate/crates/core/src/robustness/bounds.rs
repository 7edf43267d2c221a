//! Closed-form bounds on `R(p, t, n)`.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{alpha_of, EdgeLabeling};
use crate::verification::find_type_witness;

/// `((n - 2p - 19)p - α, (2n - 4)p + α)`, the lower end clamped at zero.
pub fn theorem_bounds(n: u32, p: u32, alpha: i64) -> (i64, i64) {
    let (n, p) = (i64::from(n), i64::from(p));
    let lower = ((n - 2 * p - 19) * p - alpha).max(0);
    let upper = (2 * n - 4) * p + alpha;
    (lower, upper)
}

/// `α + 2mp² + 2p(n - ℓ - 1)`: no `p`-swap of an `(m, ℓ)_p` labeling with
/// spread `α` opens a gap wider than this.
pub fn drift_bound(m: u32, l: u32, p: u32, n: u32, alpha: i64) -> i64 {
    let (m, l, p, n) = (i64::from(m), i64::from(l), i64::from(p), i64::from(n));
    alpha + 2 * m * p * p + 2 * p * (n - l - 1)
}

/// The tightest drift bound over every `(m, ℓ)` the run witness certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DriftCertificate {
    pub m: u32,
    pub l: u32,
    pub alpha: i64,
    pub bound: i64,
}

pub fn best_drift_bound(t: &EdgeLabeling, p: u32) -> Result<DriftCertificate> {
    let n = t.order();
    let alpha = alpha_of(t);
    if p == 0 {
        return Ok(DriftCertificate {
            m: 0,
            l: 0,
            alpha,
            bound: alpha,
        });
    }
    let w = find_type_witness(t, p)?;
    let best = (0..=w.m)
        .map(|m| {
            let l = w.best_l(m);
            DriftCertificate {
                m,
                l,
                alpha,
                bound: drift_bound(m, l, p, n, alpha),
            }
        })
        .min_by_key(|c| (c.bound, c.m))
        .expect("m = 0 is always certified");
    Ok(best)
}

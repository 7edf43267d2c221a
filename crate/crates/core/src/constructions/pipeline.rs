//! The halving pipeline: repeated doubling from a small `T_{8q}` up to `K_n`.

use crate::constructions::{
    direct::t8q, double, extend_even, extend_odd, AstrayLabeling, PipelineMeta, Plan,
};
use crate::error::{Error, Result};
use crate::graph::EdgeLabeling;
use crate::verification::find_type_witness;

/// `n_0 = n`, `n_1 = 8⌊n/8⌋`, `n_i = 4⌊n_{i-1}/8⌋`.
pub fn pipeline_sequence(n: u32, s: u32) -> Result<Vec<u32>> {
    if s < 1 {
        return Err(Error::InvalidParameter("pipeline needs s >= 1".into()));
    }
    let mut seq = vec![n, 8 * (n / 8)];
    for _ in 2..=s {
        let prev = *seq.last().expect("non-empty");
        seq.push(4 * (prev / 8));
    }
    let last = seq[s as usize];
    let base_q = if last % 8 == 0 {
        last / 8
    } else {
        (last - 4) / 8
    };
    if base_q < 2 {
        return Err(Error::InvalidParameter(format!(
            "n = {n} is too small for s = {s}: the innermost order is {last}, need at least 16"
        )));
    }
    Ok(seq)
}

/// Parameter `q` of the innermost `T_{8q}`.
pub fn base_q(seq: &[u32]) -> u32 {
    let last = *seq.last().expect("non-empty");
    if last.is_multiple_of(8) {
        last / 8
    } else {
        (last - 4) / 8
    }
}

/// The run length each vertex is expected to carry after the pipeline.
pub fn promised_l(seq: &[u32]) -> u32 {
    let last = *seq.last().expect("non-empty");
    let mut l = if last.is_multiple_of(8) {
        last / 4
    } else {
        (last - 4) / 4
    };
    for &ni in &seq[2..] {
        l += ni / 2;
    }
    l
}

#[derive(Clone, Debug)]
pub struct PipelineOutput {
    pub t: EdgeLabeling,
    /// Astray certificate, present for even `n`.
    pub astray: Option<AstrayLabeling>,
    pub meta: PipelineMeta,
}

/// Builds a labeling of `K_n` through `s` halving rounds.
///
/// With `p` given, the output is measured at that magnitude and `meta.m` is
/// the fewest runs per vertex that reach [`promised_l`].
pub fn pipeline(n: u32, s: u32, p: Option<u32>) -> Result<PipelineOutput> {
    let seq = pipeline_sequence(n, s)?;
    let mut steps = Vec::new();
    let last = seq[s as usize];
    let mut cur = if last % 8 == 0 {
        steps.push(format!("t8q({})", last / 8));
        t8q(last / 8)?
    } else {
        steps.push(format!("t8q({})", (last - 4) / 8));
        let t = t8q((last - 4) / 8)?;
        steps.push("extend_even(1)".into());
        let t = extend_even(&t, 1, Plan::Default)?;
        steps.push("extend_even(2)".into());
        extend_even(&t, 2, Plan::Default)?
    };
    for i in (1..s as usize).rev() {
        steps.push("double".into());
        cur = double(&cur)?;
        if seq[i] == 2 * seq[i + 1] + 4 {
            steps.push("extend_even(1)".into());
            cur = extend_even(&cur, 1, Plan::Default)?;
            steps.push("extend_even(2)".into());
            cur = extend_even(&cur, 2, Plan::Default)?;
        }
        debug_assert_eq!(cur.order(), seq[i]);
    }
    for step in 1..=((n - seq[1]) / 2) as u8 {
        steps.push(format!("extend_even({step})"));
        cur = extend_even(&cur, step, Plan::Default)?;
    }
    let (t, astray) = if n % 2 == 1 {
        steps.push("extend_odd".into());
        (extend_odd(&cur)?, None)
    } else {
        (cur.t.clone(), Some(cur))
    };

    let mut meta = PipelineMeta {
        n,
        s,
        sequence: seq.clone(),
        steps,
        ..PipelineMeta::default()
    };
    if let Some(p) = p {
        let w = find_type_witness(&t, p)?;
        let target = promised_l(&seq);
        meta.p = Some(p);
        meta.l = Some(target);
        meta.m = (0..=w.m).find(|&m| w.certifies(m, target));
    }
    Ok(PipelineOutput { t, astray, meta })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequences() {
        assert_eq!(pipeline_sequence(64, 2).unwrap(), vec![64, 64, 32]);
        assert_eq!(pipeline_sequence(257, 3).unwrap(), vec![257, 256, 128, 64]);
        assert_eq!(pipeline_sequence(130, 3).unwrap(), vec![130, 128, 64, 32]);
        assert_eq!(pipeline_sequence(100, 2).unwrap(), vec![100, 96, 48]);
        assert!(pipeline_sequence(64, 4).is_err());
        assert!(pipeline_sequence(64, 0).is_err());
        assert!(pipeline_sequence(10, 1).is_err());
    }

    #[test]
    fn sequence_halving_rule() {
        for n in 16..300 {
            for s in 1..5 {
                if let Ok(seq) = pipeline_sequence(n, s) {
                    for i in 1..s as usize {
                        assert!(
                            seq[i] == 2 * seq[i + 1] || seq[i] == 2 * seq[i + 1] + 4,
                            "{seq:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn small_pipeline_builds() {
        let out = pipeline(38, 2, Some(1)).unwrap();
        assert_eq!(out.t.order(), 38);
        assert!(out.astray.is_some());
        assert_eq!(out.meta.sequence, vec![38, 32, 16]);
    }
}

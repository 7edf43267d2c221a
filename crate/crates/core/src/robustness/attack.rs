//! The adversarial `p`-swap: push the labels at `u` up by `p` and the labels
//! at `v` down by `p`, steering clear of every bad pair.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{edge_count, vertex_sums, Edge, EdgeLabeling, Label, SwapRecord, Vertex};
use crate::robustness::bad_pairs::{bad_pair_index, select_from, BadPairIndex};

/// Outcome of [`attack`].
#[derive(Clone, Debug)]
pub struct Attack {
    pub swap: SwapRecord,
    pub u: Vertex,
    pub v: Vertex,
    /// `|U₊(u)| + |U₋(v)| + 2|B({u, v})|` for the chosen pair.
    pub score: u64,
    /// `|s(θt, u) - s(θt, v)|`.
    pub discrepancy: i64,
    /// `p(2n - 2p - 4 - score) - |s(t, u) - s(t, v)|`.
    pub guarantee: i64,
    pub sets: AttackSets,
}

/// The edge sets behind the swap, as labels under the base labeling.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AttackSets {
    /// Labels at `u` raised by `p`.
    pub d_prime: Vec<Label>,
    /// Labels at `v` lowered by `p`.
    pub d_second: Vec<Label>,
    /// `D' ∪ (D'' - p)`: every label raised by `p`.
    pub e1: Vec<Label>,
    /// `(D' + p) ∪ D''`: every label lowered by `p`.
    pub e2: Vec<Label>,
}

/// Runs the attack on the pair chosen by [`select_pair`](super::select_pair).
pub fn attack(t: &EdgeLabeling, p: u32) -> Result<Attack> {
    let idx = bad_pair_index(t, p)?;
    let (u, v, _) = select_from(&idx)?;
    attack_pair(t, &idx, u, v)
}

/// Runs the attack on a given ordered pair.
pub fn attack_pair(t: &EdgeLabeling, idx: &BadPairIndex, u: Vertex, v: Vertex) -> Result<Attack> {
    let n = t.order();
    let p = idx.p;
    if u == v || u < 1 || v < 1 || u > n || v > n {
        return Err(Error::InvalidParameter(format!(
            "attack needs two distinct vertices of K_{n}"
        )));
    }
    let eps = edge_count(n) as Label;
    let uv = Edge::new(u, v);
    let at = |w: Vertex| -> Vec<(Edge, Label)> {
        (1..=n)
            .filter(|&x| x != w)
            .map(|x| {
                let e = Edge::new(w, x);
                (e, t.label(e.u, e.v))
            })
            .collect()
    };
    let (du, dv) = (at(u), at(v));
    let near = |x: Label, y: Label| {
        let d = x.abs_diff(y);
        d == p || d == 2 * p
    };
    // B_u and B_v: ends of {u, v}-bad pairs, oriented so the u-end lies at u.
    let bad_u = |e: Edge, x: Label| dv.iter().any(|&(f, y)| f != e && near(x, y));
    let bad_v = |e: Edge, y: Label| du.iter().any(|&(f, x)| f != e && near(x, y));
    let plus_u = &idx.u_plus[u as usize - 1];
    let minus_v = &idx.u_minus[v as usize - 1];

    let mut d_prime: Vec<Label> = du
        .iter()
        .filter(|&&(e, x)| e != uv && x + p <= eps && !plus_u.contains(&e) && !bad_u(e, x))
        .map(|&(_, x)| x)
        .collect();
    let mut d_second: Vec<Label> = dv
        .iter()
        .filter(|&&(e, y)| e != uv && y > p && !minus_v.contains(&e) && !bad_v(e, y))
        .map(|&(_, y)| y)
        .collect();
    d_prime.sort_unstable();
    d_second.sort_unstable();

    let mut e1: Vec<Label> = d_prime
        .iter()
        .copied()
        .chain(d_second.iter().map(|&y| y - p))
        .collect();
    let mut e2: Vec<Label> = d_prime
        .iter()
        .map(|&x| x + p)
        .chain(d_second.iter().copied())
        .collect();
    e1.sort_unstable();
    e2.sort_unstable();

    let mut shift = vec![0i64; eps as usize + 1];
    for &x in &e1 {
        shift[x as usize] += i64::from(p);
    }
    for &x in &e2 {
        shift[x as usize] -= i64::from(p);
    }
    if e1.windows(2).any(|w| w[0] == w[1])
        || e2.windows(2).any(|w| w[0] == w[1])
        || e1.iter().any(|x| e2.binary_search(x).is_ok())
    {
        return Err(Error::Degenerate(format!(
            "shift sets overlap for pair ({u}, {v}) at p = {p}; the swap would not be a bijection"
        )));
    }
    let values: Vec<Label> = t
        .values()
        .iter()
        .map(|&x| (i64::from(x) + shift[x as usize]) as Label)
        .collect();
    let swapped = EdgeLabeling::from_values(n, values)?;
    let swap = SwapRecord::new(t.clone(), swapped, p)?;

    let before = vertex_sums(t);
    let after = vertex_sums(&swap.swapped);
    let gap = (before[u as usize - 1] - before[v as usize - 1]).abs();
    let discrepancy = (after[u as usize - 1] - after[v as usize - 1]).abs();
    let score = idx.score(u, v);
    let guarantee = i64::from(p) * (2 * i64::from(n) - 2 * i64::from(p) - 4 - score as i64) - gap;
    Ok(Attack {
        swap,
        u,
        v,
        score,
        discrepancy,
        guarantee,
        sets: AttackSets {
            d_prime,
            d_second,
            e1,
            e2,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::factorial_baseline;

    #[test]
    fn baseline_attack_meets_guarantee() {
        let t = factorial_baseline(2).unwrap();
        let a = attack(&t, 1).unwrap();
        a.swap.validate().unwrap();
        assert!(a.discrepancy >= a.guarantee);
        let shifted = a.sets.d_prime.len() + a.sets.d_second.len();
        assert_eq!(a.sets.e1.len(), shifted);
        assert_eq!(a.sets.e2.len(), shifted);
        assert_eq!(a.discrepancy, shifted as i64);
    }
}

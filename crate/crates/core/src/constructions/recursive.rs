//! Recursive constructions on astray-good labelings: adding two vertices,
//! adding one vertex, and doubling `K_{4q}` to `K_{8q}`.

use std::collections::BTreeMap;

use crate::constructions::{AstrayLabeling, Part};
use crate::error::{Error, Result};
use crate::graph::{edge_count, Edge, EdgeLabeling, Label, Vertex};
use crate::squares::weaving_entry;
use crate::verification::check_astray;

/// How `extend_even` labels the astray part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Plan {
    /// Old astray edges keep their relative order; new ones follow in canonical order.
    #[default]
    Default,
    /// The explicit centre assignments used when chaining `T_{8q}` to `T_{8q+2i}`.
    /// Requires the astray part to be the matching plus the step-2 cross edges.
    TPlan,
}

fn require_good(input: &AstrayLabeling) -> Result<()> {
    let report = check_astray(&input.t, &input.astray, 3);
    if !report.pass {
        return Err(Error::NotAstrayGood {
            b: 3,
            detail: report.first_violation.unwrap_or_default(),
        });
    }
    Ok(())
}

/// Adds vertices `N+1` and `N+2` to a 3-astray good labeling of `K_N`.
///
/// `step` selects the pattern by `N mod 8`: step 1 needs `N ≡ 0`, step 2
/// `N ≡ 2`, step 3 `N ≡ 4`. Steps 1 and 3 join the new vertices to every old
/// vertex through complementary star labels and make the new edge between
/// them astray. Step 2 stars only the first `N-2` vertices; the five edges
/// among the new vertices and the last two old ones become astray.
pub fn extend_even(input: &AstrayLabeling, step: u8, plan: Plan) -> Result<AstrayLabeling> {
    require_good(input)?;
    let n_old = input.order();
    let want = match step {
        1 => 0,
        2 => 2,
        3 => 4,
        _ => {
            return Err(Error::InvalidParameter(format!(
                "extend_even step {step} is not 1, 2 or 3"
            )))
        }
    };
    if n_old % 8 != want || n_old < 8 {
        return Err(Error::InvalidParameter(format!(
            "extend_even step {step} needs an input order ≡ {want} mod 8, got {n_old}"
        )));
    }
    let n = n_old + 2;
    let (x, y) = (n_old + 1, n_old + 2);
    let eps = edge_count(n) as Label;
    let star: Vec<Vertex> = if step == 2 {
        (1..=n_old - 2).collect()
    } else {
        (1..=n_old).collect()
    };
    let s = star.len() as Label;
    let quarter = s / 4;
    let mut new_astray = vec![Edge::new(x, y)];
    if step == 2 {
        for w in [n_old - 1, n_old] {
            new_astray.push(Edge::new(w, x));
            new_astray.push(Edge::new(w, y));
        }
    }
    new_astray.sort_unstable();
    let grow = new_astray.len() as Label;
    let old_a = input.a() as Label;
    let base = input.l() as Label + s + old_a;

    let mut labels: BTreeMap<Edge, Label> = BTreeMap::new();
    for (e, t) in input.t.iter() {
        let shifted = match input.part_of_label(t) {
            Part::Lower | Part::Astray => t + s,
            Part::Higher => t + s + grow,
        };
        labels.insert(e, shifted);
    }
    for (j, &w) in star.iter().enumerate() {
        let j = j as Label + 1;
        let tx = if j <= quarter || j > 3 * quarter {
            j
        } else {
            eps + 1 - j
        };
        labels.insert(Edge::new(w, x), tx);
        labels.insert(Edge::new(w, y), eps + 1 - tx);
    }
    for (k, e) in new_astray.iter().enumerate() {
        labels.insert(*e, base + k as Label + 1);
    }
    let mut astray = input.astray.clone();
    astray.extend(new_astray);

    if plan == Plan::TPlan {
        let q = (n_old - want) / 8;
        let wanted = t_plan(q, step);
        let mut have: Vec<Edge> = astray.clone();
        have.sort_unstable();
        let keys: Vec<Edge> = wanted.keys().copied().collect();
        if have != keys {
            return Err(Error::InvalidParameter(
                "the T-plan needs the astray part to be the vertex matching plus the step-2 cross edges".into(),
            ));
        }
        labels.extend(wanted);
    }

    let t = EdgeLabeling::from_values(n, labels.into_values().collect())?;
    AstrayLabeling::seal(t, astray, 3)
}

/// Explicit astray labels of `T_{8q+2i}` for `i = step`.
fn t_plan(q: u32, step: u8) -> BTreeMap<Edge, Label> {
    let c = 16 * q * q;
    let m = |k: u32| Edge::new(2 * k - 1, 2 * k);
    let (a1, a2, a3, a4) = (8 * q + 1, 8 * q + 2, 8 * q + 3, 8 * q + 4);
    let mut out = BTreeMap::new();
    match step {
        1 => {
            for k in 1..=4 * q + 1 {
                out.insert(m(k), c + 4 * q + k);
            }
        }
        2 => {
            for k in 1..=2 * q + 1 {
                out.insert(m(k), c + 12 * q + k);
            }
            for k in 2 * q + 2..=4 * q + 2 {
                out.insert(m(k), c + 12 * q + 4 + k);
            }
            out.insert(Edge::new(a4, a1), c + 14 * q + 2);
            out.insert(Edge::new(a3, a2), c + 14 * q + 3);
            out.insert(Edge::new(a3, a1), c + 14 * q + 4);
            out.insert(Edge::new(a4, a2), c + 14 * q + 5);
        }
        _ => {
            out.insert(Edge::new(a4, a1), c + 22 * q + 6);
            out.insert(Edge::new(a3, a2), c + 22 * q + 7);
            out.insert(Edge::new(a3, a1), c + 22 * q + 9);
            out.insert(Edge::new(a4, a2), c + 22 * q + 10);
            for k in 1..=2 * q + 1 {
                out.insert(m(k), c + 20 * q + 4 + k);
            }
            out.insert(m(2 * q + 2), c + 22 * q + 8);
            for k in 2 * q + 3..=4 * q + 3 {
                out.insert(m(k), c + 20 * q + 8 + k);
            }
        }
    }
    out
}

/// Adds one vertex to a 3-astray good labeling of `K_{2k}`.
///
/// The result is only almost supermagic; no astray certificate survives.
pub fn extend_odd(input: &AstrayLabeling) -> Result<EdgeLabeling> {
    require_good(input)?;
    let n_old = input.order();
    if !n_old.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "extend_odd needs an even order, got {n_old}"
        )));
    }
    let k = n_old / 2;
    let n = n_old + 1;
    let (l, a) = (input.l() as Label, input.a() as Label);
    let mut values = Vec::with_capacity(edge_count(n) as usize);
    for uu in 1..n {
        for vv in uu + 1..=n {
            let x = if vv == n {
                if uu <= k {
                    l + a + k + uu
                } else {
                    l + uu - k
                }
            } else {
                let t = input.t.label(uu, vv);
                match input.part_of_label(t) {
                    Part::Lower => t,
                    Part::Astray => t + k,
                    Part::Higher => t + 2 * k,
                }
            };
            values.push(x);
        }
    }
    EdgeLabeling::from_values(n, values)
}

/// Doubles a 3-astray good labeling of `K_{4q}` into one of `K_{8q}`.
///
/// Old vertices keep their numbers; `u_i` is `4q + i`. The cross edge
/// `u_i v_j` takes the weaving square entry `(i, j)` lifted past the two
/// lower copies, or past the astray block as well for large entries.
pub fn double(input: &AstrayLabeling) -> Result<AstrayLabeling> {
    require_good(input)?;
    let n_old = input.order();
    if !n_old.is_multiple_of(4) {
        return Err(Error::InvalidParameter(format!(
            "double needs an order divisible by 4, got {n_old}"
        )));
    }
    let q = n_old / 4;
    let n = 2 * n_old;
    let eps = edge_count(n) as Label;
    let delta = eps - edge_count(n_old) as Label;
    let (l, a) = (input.l() as Label, input.a() as Label);
    let big = 8 * q * q;

    let mut astray = input.astray.clone();
    astray.extend(
        input
            .astray
            .iter()
            .map(|e| Edge::new(e.u + n_old, e.v + n_old)),
    );
    astray.sort_unstable();
    let first = eps / 2 - a + 1;
    let astray_label: BTreeMap<Edge, Label> = astray
        .iter()
        .enumerate()
        .map(|(k, &e)| (e, first + k as Label))
        .collect();

    let t = EdgeLabeling::from_fn(n, |i, j| {
        let e = Edge::new(i, j);
        if let Some(&x) = astray_label.get(&e) {
            return x;
        }
        if e.v <= n_old {
            let t = input.t.label(e.u, e.v);
            match input.part_of_label(t) {
                Part::Higher => t + delta,
                _ => t,
            }
        } else if e.u > n_old {
            let t = input.t.label(e.u - n_old, e.v - n_old);
            match input.part_of_label(t) {
                Part::Higher => t + delta - l,
                _ => t + l,
            }
        } else {
            let w = weaving_entry(q, e.v - n_old, e.u);
            if w <= big {
                w + 2 * l
            } else {
                w + 2 * l + 2 * a
            }
        }
    })?;
    AstrayLabeling::seal(t, astray, 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::t8q;
    use crate::graph::{alpha_of, vertex_sums};

    #[test]
    fn t16_step1_examples() {
        let t16 = t8q(2).unwrap();
        let out = extend_even(&t16, 1, Plan::Default).unwrap();
        assert_eq!(out.t.label(1, 17), 1);
        assert_eq!(out.t.label(1, 18), 153);
        for (e, x) in t16.t.iter() {
            let y = out.t.label(e.u, e.v);
            match t16.part_of_label(x) {
                Part::Lower => assert_eq!(y, x + 16),
                Part::Higher => assert_eq!(y, x + 17),
                Part::Astray => {}
            }
        }
        let planned = extend_even(&t16, 1, Plan::TPlan).unwrap();
        assert_eq!(planned.t.label(1, 2), 73);
    }

    #[test]
    fn t_plans_chain() {
        for q in 2..=4 {
            let t0 = t8q(q).unwrap();
            let t1 = extend_even(&t0, 1, Plan::TPlan).unwrap();
            let t2 = extend_even(&t1, 2, Plan::TPlan).unwrap();
            let t3 = extend_even(&t2, 3, Plan::TPlan).unwrap();
            // The planned centre labels put every vertex within the listed spread.
            let q = i64::from(q);
            assert_eq!(alpha_of(&t1.t), 4 * q);
            assert_eq!(alpha_of(&t2.t), 4 * q + 5);
            assert_eq!(alpha_of(&t3.t), 4 * q + 6);
        }
    }

    #[test]
    fn extend_odd_examples() {
        let t16 = t8q(2).unwrap();
        let t = extend_odd(&t16).unwrap();
        assert_eq!(t.label(1, 17), 73);
        assert_eq!(t.label(9, 17), 57);
        assert_eq!(vertex_sums(&t)[16], 1096);
        assert!(alpha_of(&t) <= 7 * 17);
    }

    #[test]
    fn double_examples() {
        let t16 = t8q(2).unwrap();
        let out = double(&t16).unwrap();
        for i in 1..=16 {
            for j in 1..=16 {
                let w = weaving_entry(4, i, j);
                let want = if w <= 128 { w + 112 } else { w + 128 };
                assert_eq!(out.t.label(16 + i, j), want);
            }
        }
        for (e, x) in t16.t.iter() {
            if t16.part_of_label(x) == Part::Higher {
                assert_eq!(out.t.label(e.u, e.v), x + 376);
            }
        }
        let mut centre: Vec<Label> = out.astray.iter().map(|e| out.t.label(e.u, e.v)).collect();
        centre.sort_unstable();
        assert_eq!(centre, (241..=256).collect::<Vec<_>>());
    }

    #[test]
    fn wrong_step_is_rejected() {
        let t16 = t8q(2).unwrap();
        assert!(extend_even(&t16, 2, Plan::Default).is_err());
        assert!(extend_even(&t16, 4, Plan::Default).is_err());
    }
}

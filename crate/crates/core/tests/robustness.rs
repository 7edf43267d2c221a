mod common;

use proptest::prelude::*;
use swapmagic::constructions::{factorial_baseline, t8q};
use swapmagic::robustness::{
    attack, bad_pair_index, best_drift_bound, block_shift_extremes, drift_bound, exact_robustness,
    interior_blocks, report, select_pair, theorem_bounds, DEFAULT_CAP,
};
use swapmagic::verification::find_type_witness;
use swapmagic::{alpha_of, vertex_sums, EdgeLabeling, Label};

fn labeling(min_n: u32, max_n: u32) -> impl Strategy<Value = EdgeLabeling> {
    (min_n..=max_n).prop_flat_map(|n| {
        let eps = n * (n - 1) / 2;
        Just((1..=eps).collect::<Vec<Label>>())
            .prop_shuffle()
            .prop_map(move |v| EdgeLabeling::from_values(n, v).unwrap())
    })
}

#[test]
fn oracle_matches_enumeration_small() {
    let mut cases = vec![EdgeLabeling::from_values(3, vec![1, 2, 3]).unwrap()];
    for n in 4..=7 {
        cases.push(common::canonical(n));
        cases.push(common::reversed(n));
        cases.push(common::shuffled(n, u64::from(n)));
    }
    cases.push(factorial_baseline(1).unwrap());
    for t in &cases {
        for p in 0..=2 {
            let want = common::brute_force_r(t, p);
            assert_eq!(
                exact_robustness(t, p, DEFAULT_CAP).unwrap().r,
                want,
                "n {} p {p}",
                t.order()
            );
            assert_eq!(
                common::frontier_r(t, p),
                want,
                "frontier n {} p {p}",
                t.order()
            );
        }
    }
}

#[test]
fn oracle_matches_enumeration_k8() {
    for t in [
        common::canonical(8),
        common::shuffled(8, 80),
        common::permuted(&common::reversed(8), 3),
    ] {
        let exact = exact_robustness(&t, 1, DEFAULT_CAP).unwrap().r;
        assert_eq!(exact, common::brute_force_r(&t, 1));
        assert_eq!(exact, common::frontier_r(&t, 1));
        assert_eq!(
            exact_robustness(&t, 2, DEFAULT_CAP).unwrap().r,
            common::frontier_r(&t, 2)
        );
    }
}

#[test]
fn k3_examples() {
    let t = EdgeLabeling::from_values(3, vec![1, 2, 3]).unwrap();
    assert_eq!(exact_robustness(&t, 1, DEFAULT_CAP).unwrap().r, 2);
    let idx = bad_pair_index(&t, 1).unwrap();
    assert_eq!(idx.u_plus_len(1), 1);
    assert_eq!(idx.u_minus_len(1), 1);
}

#[test]
fn far_apart_labels_score_zero() {
    // On canonical K_4 at p = 5 the only bad labels are 1 on {1,2} and 6 on
    // {3,4}; vertices 1 and 2 never see label 6.
    let t = common::canonical(4);
    assert_eq!(select_pair(&t, 5).unwrap(), (1, 2, 0));
}

#[test]
fn t8q4_pair_is_recorded() {
    let t = t8q(4).unwrap().t;
    let (u, v, score) = select_pair(&t, 2).unwrap();
    assert!(u != v);
    assert!(score <= 32 + 15);
    assert_eq!(select_pair(&t, 2).unwrap(), (u, v, score));
}

#[test]
fn baseline_attack_count() {
    let t = factorial_baseline(2).unwrap();
    let a = attack(&t, 1).unwrap();
    let shifted = (a.sets.d_prime.len() + a.sets.d_second.len()) as i64;
    assert_eq!(a.discrepancy, shifted);
    assert!(a.discrepancy >= a.guarantee);
    assert_eq!(a.swap.moved_edges() as i64, 2 * shifted);
}

#[test]
fn block_extremes_on_k6() {
    let t = common::canonical(6);
    let inv = t.inverse();
    let f: Vec<_> = (5..=8).map(|x| t.edge_at(inv[x - 1])).collect();
    assert_eq!(
        block_shift_extremes(&t, &f, 1, DEFAULT_CAP).unwrap(),
        (-1, 1)
    );
    let gap: Vec<_> = [5, 7].iter().map(|&x| t.edge_at(inv[x - 1])).collect();
    assert!(block_shift_extremes(&t, &gap, 1, DEFAULT_CAP).is_err());
}

#[test]
fn drift_cross_check_t16() {
    let t = t8q(2).unwrap().t;
    let w = find_type_witness(&t, 1).unwrap();
    assert!(w.certifies(2, 4));
    let bound = drift_bound(2, 4, 1, 16, alpha_of(&t));
    let r = exact_robustness(&t, 1, 120).unwrap().r;
    assert!(r <= bound, "{r} > {bound}");
    assert!(r <= best_drift_bound(&t, 1).unwrap().bound);
}

#[test]
fn report_is_consistent() {
    let t = factorial_baseline(2).unwrap();
    let r = report(&t, 2, Some(DEFAULT_CAP)).unwrap();
    assert!(r.consistent());
    let json = serde_json::to_string(&r).unwrap();
    assert_eq!(
        json,
        serde_json::to_string(&report(&t, 2, Some(DEFAULT_CAP)).unwrap()).unwrap()
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bad_pair_inequalities(t in labeling(3, 20), p in 1u32..6) {
        prop_assume!(u64::from(p) < t.edge_count());
        let idx = bad_pair_index(&t, p).unwrap();
        prop_assert!(idx.bounds_hold());
    }

    #[test]
    fn selected_score_is_small(t in labeling(3, 24), p in 1u32..5) {
        prop_assume!(u64::from(p) < t.edge_count());
        let (u, v, score) = select_pair(&t, p).unwrap();
        prop_assert!(u != v);
        prop_assert!(score <= u64::from(t.order()) + 15);
    }

    #[test]
    fn attack_is_a_valid_swap(t in labeling(4, 24), p in 1u32..5) {
        prop_assume!(u64::from(p) < t.edge_count());
        let a = attack(&t, p).unwrap();
        a.swap.validate().unwrap();
        prop_assert!(a.swap.max_displacement() <= p);
        prop_assert!(a.discrepancy >= a.guarantee);
        let (lower, _) = theorem_bounds(t.order(), p, alpha_of(&t));
        prop_assert!(a.discrepancy >= lower);
        let s = vertex_sums(&a.swap.swapped);
        prop_assert_eq!((s[a.u as usize - 1] - s[a.v as usize - 1]).abs(), a.discrepancy);
    }

    #[test]
    fn sandwich(t in labeling(3, 10), p in 0u32..4) {
        let alpha = alpha_of(&t);
        let exact = exact_robustness(&t, p, DEFAULT_CAP).unwrap();
        exact.swap.validate().unwrap();
        let (_, upper) = theorem_bounds(t.order(), p, alpha);
        prop_assert!(alpha <= exact.r && exact.r <= upper);
        prop_assert!(exact.r <= best_drift_bound(&t, p).unwrap().bound);
        if p >= 1 && u64::from(p) < t.edge_count() {
            prop_assert!(attack(&t, p).unwrap().discrepancy <= exact.r);
        }
        let s = vertex_sums(&exact.swap.swapped);
        prop_assert_eq!(s[exact.u as usize - 1] - s[exact.v as usize - 1], exact.r);
    }

    #[test]
    fn block_bound(t in labeling(5, 12), p in 1u32..=3) {
        let n = t.order();
        for v in 1..=n {
            for len in [2 * p, 2 * p + 1] {
                for f in interior_blocks(&t, v, len, p) {
                    let (lo, hi) = block_shift_extremes(&t, &f, p, DEFAULT_CAP).unwrap();
                    let sq = i64::from(p * p);
                    prop_assert!(-sq <= lo && hi <= sq);
                    if len == 2 * p {
                        prop_assert_eq!((lo, hi), (-sq, sq));
                    }
                }
            }
        }
    }
}

use proptest::prelude::*;
use swapmagic::constructions::{factorial_baseline, pipeline, t8q};
use swapmagic::robustness::drift_bound;
use swapmagic::sim::{sample_p_swap, simulate, SimConfig};
use swapmagic::{alpha_of, EdgeLabeling, Label};

fn labeling(max_n: u32) -> impl Strategy<Value = EdgeLabeling> {
    (3..=max_n).prop_flat_map(|n| {
        let eps = n * (n - 1) / 2;
        Just((1..=eps).collect::<Vec<Label>>())
            .prop_shuffle()
            .prop_map(move |v| EdgeLabeling::from_values(n, v).unwrap())
    })
}

#[test]
fn t16_stays_under_its_bound() {
    let t = t8q(2).unwrap().t;
    let limit = drift_bound(2, 4, 1, 16, 8);
    assert_eq!(limit, 34);
    let cfg = SimConfig {
        epochs: 10,
        step_budget: 500,
        p: 1,
        seed: 9,
    };
    let tr = simulate(&t, &cfg).unwrap();
    assert_eq!(tr.records.len(), 11);
    assert_eq!(tr.records[0].discrepancy, alpha_of(&t));
    assert!(tr.max_discrepancy() <= limit);
    assert!(tr.within_bound());
    tr.final_swap.validate().unwrap();
}

#[test]
fn traces_are_reproducible() {
    let t = factorial_baseline(3).unwrap();
    let cfg = SimConfig {
        epochs: 6,
        step_budget: 100,
        p: 2,
        seed: 42,
    };
    let a = simulate(&t, &cfg).unwrap();
    let b = simulate(&t, &cfg).unwrap();
    assert_eq!(a.to_csv(), b.to_csv());
    assert_eq!(a.final_swap, b.final_swap);
    assert!(a.to_csv().starts_with("epoch,discrepancy,u,v,max_disp\n"));
}

/// Paired runs of the supermagic baseline against the pipeline at n = 18.
fn paired_wins(p: u32) -> usize {
    let base = factorial_baseline(4).unwrap();
    let pipe = pipeline(18, 1, None).unwrap().t;
    (0..100)
        .filter(|&seed| {
            let cfg = SimConfig {
                epochs: 10,
                step_budget: 200,
                p,
                seed,
            };
            simulate(&pipe, &cfg).unwrap().max_discrepancy()
                <= simulate(&base, &cfg).unwrap().max_discrepancy()
        })
        .count()
}

#[test]
fn baseline_against_pipeline_is_recorded() {
    let wins = paired_wins(2);
    println!("pipeline at or below baseline in {wins}/100 runs at p = 2");
    assert_eq!(wins, paired_wins(2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sampled_swaps_are_valid(t in labeling(10), p in 0u32..4, seed in any::<u64>()) {
        let s = sample_p_swap(&t, p, seed);
        s.validate().unwrap();
        prop_assert!(s.max_displacement() <= p);
        prop_assert_eq!(s, sample_p_swap(&t, p, seed));
    }

    #[test]
    fn every_epoch_respects_p(t in labeling(9), p in 1u32..4, seed in any::<u64>()) {
        let cfg = SimConfig { epochs: 5, step_budget: 50, p, seed };
        let tr = simulate(&t, &cfg).unwrap();
        prop_assert!(tr.records.iter().all(|r| r.max_disp <= p));
        prop_assert!(tr.within_bound());
    }
}

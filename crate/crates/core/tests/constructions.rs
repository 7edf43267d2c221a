mod common;

use proptest::prelude::*;
use swapmagic::constructions::cocktail::{parse_cocktail, supermagic_cocktail, DEFAULT_BUDGET};
use swapmagic::constructions::pipeline::promised_l;
use swapmagic::constructions::{
    double, extend_even, extend_odd, factorial_baseline, factorial_style, pipeline, t8q,
    AstrayLabeling, Part, Plan,
};
use swapmagic::io::{labeling_to_json, parse_labeling, Meta};
use swapmagic::verification::{check_astray, find_type_witness};
use swapmagic::{alpha_of, vertex_sums, Edge};

/// Non-astray sum at every vertex, recomputed from the labels alone.
fn non_astray_sums(a: &AstrayLabeling) -> Vec<i64> {
    let n = a.order();
    (1..=n)
        .map(|v| {
            (1..=n)
                .filter(|&w| w != v && !a.astray.contains(&Edge::new(v, w)))
                .map(|w| i64::from(a.t.label(v, w)))
                .sum()
        })
        .collect()
}

#[test]
fn baseline_is_supermagic() {
    for s in 1..=12u32 {
        let t = factorial_baseline(s).unwrap();
        let s = i64::from(s);
        let want = (4 * s + 1) * (4 * s * s + 3 * s + 1);
        assert!(common::sums_by_definition(&t).iter().all(|&x| x == want));
        assert_eq!(alpha_of(&t), 0);
    }
    assert!(factorial_baseline(0).is_err());
}

#[test]
fn factorial_style_is_near_supermagic_and_seeded() {
    let a = factorial_style(24, 5, 500_000).unwrap();
    let b = factorial_style(24, 5, 500_000).unwrap();
    assert_eq!(a, b);
    assert!(alpha_of(&a) <= 2);
    assert!(factorial_style(7, 1, 10).is_err());
}

#[test]
fn cocktail_labelings_are_supermagic() {
    for q in 2..=5 {
        let c = supermagic_cocktail(q, DEFAULT_BUDGET).unwrap();
        let sums = c.vertex_sums();
        assert!(sums.iter().all(|&s| s == c.target()));
        let back = parse_cocktail(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }
}

#[test]
fn cocktail_parser_rejects_non_magic() {
    let c = supermagic_cocktail(2, DEFAULT_BUDGET).unwrap();
    let mut labels = c.labels().to_vec();
    labels.swap(0, 1);
    let text = format!("{{\"q\":2,\"labels\":{labels:?}}}");
    assert!(parse_cocktail(&text).is_err());
    assert!(parse_cocktail("{\"q\":1,\"labels\":[]}").is_err());
}

#[test]
fn t8q_certificates() {
    for q in 2..=6u32 {
        let a = t8q(q).unwrap();
        let r = check_astray(&a.t, &a.astray, 1);
        assert!(r.pass, "{r:?}");
        let q = i64::from(q);
        let want = (4 * q - 1) * (32 * q * q - 4 * q + 1);
        assert!(non_astray_sums(&a).iter().all(|&s| s == want));
        assert!(alpha_of(&a.t) <= 8 * q / 2);
    }
}

#[test]
fn recursion_preserves_certificates() {
    for q in 2..=4u32 {
        let t0 = t8q(q).unwrap();
        let t1 = extend_even(&t0, 1, Plan::Default).unwrap();
        let t2 = extend_even(&t1, 2, Plan::Default).unwrap();
        let t3 = extend_even(&t2, 3, Plan::Default).unwrap();
        for a in [&t1, &t2, &t3] {
            assert!(check_astray(&a.t, &a.astray, 3).pass);
        }
        let d = double(&t0).unwrap();
        assert!(check_astray(&d.t, &d.astray, 3).pass);
        let odd = extend_odd(&t0).unwrap();
        assert!(alpha_of(&odd) <= 7 * i64::from(odd.order()));
    }
}

#[test]
fn extend_even_keeps_old_edges_in_their_part() {
    let t0 = t8q(3).unwrap();
    let t1 = extend_even(&t0, 1, Plan::Default).unwrap();
    for (e, x) in t0.t.iter() {
        assert_eq!(t0.part_of_label(x), t1.part(e), "{e}");
    }
}

#[test]
fn extend_odd_rejects_odd_input_via_certificate() {
    let t0 = t8q(2).unwrap();
    let bogus = AstrayLabeling::from_parts(t0.t.clone(), vec![], 3);
    assert!(bogus.is_err());
}

#[test]
fn pipeline_small_grid() {
    for (n, s) in [(40, 2), (41, 2), (42, 2), (44, 1), (70, 2)] {
        let out = pipeline(n, s, Some(1)).unwrap();
        assert_eq!(out.t.order(), n);
        assert!(alpha_of(&out.t) <= 7 * i64::from(n));
        if let Some(a) = &out.astray {
            assert!(a.check().pass);
        }
        let m = out.meta.m.expect("promised run length is reached");
        assert!(m <= 2 * s + 3);
        let w = find_type_witness(&out.t, 1).unwrap();
        assert!(w.certifies(m, promised_l(&out.meta.sequence)));
    }
}

#[test]
fn astray_meta_round_trips() {
    let a = t8q(2).unwrap();
    let meta = Meta::named("t8q").with_astray(&a);
    let text = labeling_to_json(&a.t, &meta).unwrap();
    let (t, m) = parse_labeling(&text).unwrap();
    let astray = m.astray_edges(&t).unwrap().unwrap();
    assert_eq!(astray, a.astray);
    assert!(AstrayLabeling::from_parts(t, astray, 1).is_ok());
}

#[test]
fn astray_meta_with_wrong_label_is_rejected() {
    let a = t8q(2).unwrap();
    let mut meta = Meta::named("t8q").with_astray(&a);
    meta.astray.as_mut().unwrap()[0][2] += 1;
    let text = labeling_to_json(&a.t, &meta).unwrap();
    assert!(parse_labeling(&text).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn certificates_survive_vertex_relabeling(seed in any::<u64>()) {
        let a = t8q(2).unwrap();
        let t = common::permuted(&a.t, seed);
        // Recover each astray edge's new name from its label.
        let inv = t.inverse();
        let astray: Vec<Edge> = a
            .astray
            .iter()
            .map(|e| t.edge_at(inv[a.t.label(e.u, e.v) as usize - 1]))
            .collect();
        prop_assert!(check_astray(&t, &astray, 1).pass);
        prop_assert_eq!(alpha_of(&t), alpha_of(&a.t));
    }

    #[test]
    fn astray_parts_partition_labels(q in 2u32..=4) {
        let a = double(&t8q(q).unwrap()).unwrap();
        let lower = a.lower().len() as u64;
        let higher = a.higher().len() as u64;
        prop_assert_eq!(lower, higher);
        prop_assert_eq!(lower + higher + a.a(), a.t.edge_count());
        for e in &a.astray {
            prop_assert_eq!(a.part(*e), Part::Astray);
        }
        prop_assert_eq!(vertex_sums(&a.t).iter().sum::<i64>(), {
            let eps = a.t.edge_count() as i64;
            eps * (eps + 1)
        });
    }
}

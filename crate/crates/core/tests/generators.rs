use proptest::prelude::*;
use toughham_core::generators::{
    chvatal_family, chvatal_family_with, perturb, random_2k2_free, random_gnp, random_split_graph,
    GenError, GenSpec,
};
use toughham_core::graph::named;
use toughham_core::oracles::{
    find_2k2_by_edge_pairs, find_2k2_by_non_neighborhoods, is_2k2_free, toughness, Toughness,
};
use toughham_core::two_factor::find_two_factor;
use toughham_core::{Graph, Rational, SizeLimits};

fn differing_pairs(a: &Graph, b: &Graph) -> usize {
    let mut d = 0;
    for u in 0..a.n() {
        for v in u + 1..a.n() {
            d += (a.has_edge(u, v) != b.has_edge(u, v)) as usize;
        }
    }
    d
}

#[test]
fn split_graph_corners() {
    assert_eq!(
        random_split_graph(3, 0, 0.3, 9).unwrap(),
        named::complete(3)
    );
    assert_eq!(random_split_graph(0, 4, 0.9, 9).unwrap(), named::empty(4));
    let g = random_split_graph(4, 3, 0.5, 1).unwrap();
    assert_eq!(g.n(), 7);
    assert!(is_2k2_free(&g).is_none());
    assert!(matches!(
        random_split_graph(2, 2, 1.5, 0),
        Err(GenError::Probability(_))
    ));
}

#[test]
fn repaired_graph_corners() {
    assert_eq!(random_2k2_free(4, 1.0, 5, 0).unwrap(), named::complete(4));
    let g = random_2k2_free(10, 0.5, 7, 100).unwrap();
    assert!(find_2k2_by_edge_pairs(&g).is_none());
    assert!(find_2k2_by_non_neighborhoods(&g).is_none());
}

#[test]
fn repair_gives_up_after_its_budget() {
    // a sparse 12-vertex graph needs more than one deletion
    assert!(matches!(
        random_2k2_free(12, 0.3, 1, 1),
        Err(GenError::Exhausted(1))
    ));
}

#[test]
fn chvatal_values() {
    let g1 = chvatal_family(1).unwrap();
    assert_eq!(
        toughness(&g1).unwrap().value,
        Toughness::Finite(Rational::from_integer(1))
    );
    assert!(find_two_factor(&g1).is_none());
    let g2 = chvatal_family(2).unwrap();
    assert_eq!(
        toughness(&g2).unwrap().value,
        Toughness::Finite(Rational::new(6, 5))
    );
    assert!(find_two_factor(&g2).is_none());
    for g in [g1, g2, chvatal_family(3).unwrap()] {
        assert!(is_2k2_free(&g).is_none());
    }
    assert!(matches!(chvatal_family(0), Err(GenError::ZeroParameter)));
}

#[test]
fn chvatal_gate_respects_size_limits() {
    let tight = SizeLimits::default().with_spec("toughness=10").unwrap();
    assert!(chvatal_family_with(2, &tight).is_err());
}

#[test]
fn perturb_examples() {
    let c6 = named::cycle(6);
    assert_eq!(perturb(&c6, 0, 3), c6);
    assert_eq!(differing_pairs(&c6, &perturb(&c6, 1, 3)), 1);
}

#[test]
fn spec_ids_and_round_trip() {
    let spec = GenSpec::Perturbed {
        base: Box::new(GenSpec::Chvatal { l: 2 }),
        flips: 3,
        seed: 5,
    };
    let json = serde_json::to_string(&spec).unwrap();
    let back: GenSpec = serde_json::from_str(&json).unwrap();
    assert_eq!(back, spec);
    assert_eq!(back.generate().unwrap(), spec.generate().unwrap());
    assert_eq!(GenSpec::Chvatal { l: 2 }.file_name(), "chvatal-l2.graph");
}

proptest! {
    #[test]
    fn same_spec_same_graph(n in 1usize..14, p in 0u32..=100, seed in any::<u64>()) {
        let p = p as f64 / 100.0;
        prop_assert_eq!(random_gnp(n, p, seed).unwrap(), random_gnp(n, p, seed).unwrap());
        let spec = GenSpec::TwoK2Free { n, p, seed, max_retries: 10_000 };
        prop_assert_eq!(spec.generate().ok(), spec.generate().ok());
    }

    #[test]
    fn split_outputs_partition(c in 0usize..8, i in 0usize..8, p in 0u32..=100, seed in any::<u64>()) {
        let g = random_split_graph(c, i, p as f64 / 100.0, seed).unwrap();
        prop_assert!(is_2k2_free(&g).is_none());
        for u in 0..c + i {
            for v in u + 1..c + i {
                if v < c {
                    prop_assert!(g.has_edge(u, v));
                }
                if u >= c {
                    prop_assert!(!g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn repaired_outputs_are_free(n in 1usize..13, p in 0u32..=100, seed in any::<u64>()) {
        if let Ok(g) = random_2k2_free(n, p as f64 / 100.0, seed, 10_000) {
            prop_assert!(find_2k2_by_edge_pairs(&g).is_none());
            prop_assert!(find_2k2_by_non_neighborhoods(&g).is_none());
        }
    }

    #[test]
    fn perturb_flips_at_most_k(n in 2usize..10, k in 0usize..6, seed in any::<u64>()) {
        let g = random_gnp(n, 0.5, seed).unwrap();
        let h = perturb(&g, k, seed ^ 1);
        let d = differing_pairs(&g, &h);
        prop_assert!(d <= k && d % 2 == k % 2);
    }
}

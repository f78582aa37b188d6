use proptest::prelude::*;
use toughham_core::engine::{
    classify, direct_merge_scan, run_engine, run_engine_with, EngineError, EngineOptions,
    RunOutcome, StartFactor,
};
use toughham_core::generators::{chvatal_family, random_2k2_free};
use toughham_core::graph::named;
use toughham_core::oracles::{hamiltonian_cycle_bruteforce, is_2k2_free, toughness};
use toughham_core::two_factor::find_two_factor;
use toughham_core::{verify_certificate, Certificate, Graph, Rational, TwoFactor};

fn check_outcome(g: &Graph, outcome: &RunOutcome) {
    match outcome {
        RunOutcome::Hamiltonian { cycle } => {
            verify_certificate(g, &Certificate::HamiltonianCycle(cycle.clone()), None).unwrap()
        }
        RunOutcome::Witness { certificate } => verify_certificate(g, certificate, None).unwrap(),
        RunOutcome::NoTwoFactor { cut } => {
            assert!(find_two_factor(g).is_none());
            if let Some(s) = cut {
                let comps = g.component_count_without(s);
                assert!(comps >= 2 && s.len() < 2 * comps);
            }
        }
        RunOutcome::Stuck { reason } => panic!("stuck: {reason:?}"),
    }
}

#[test]
fn cycles_and_cliques_are_hamiltonian() {
    for g in [named::cycle(5), named::complete(3), named::complete(7)] {
        let r = run_engine(&g).unwrap();
        assert!(matches!(r.outcome, RunOutcome::Hamiltonian { .. }));
        check_outcome(&g, &r.outcome);
    }
    assert_eq!(
        run_engine(&named::cycle(5)).unwrap().omega_trajectory,
        vec![1]
    );
}

#[test]
fn rejects_small_and_non_free_inputs() {
    assert_eq!(
        run_engine(&named::complete(2)),
        Err(EngineError::TooSmall(2))
    );
    match run_engine(&named::cycle(6)) {
        Err(EngineError::Not2K2Free(q)) => assert_eq!(q.vertices(), [0, 1, 3, 4]),
        other => panic!("{other:?}"),
    }
}

#[test]
fn chvatal_graphs_report_a_cut() {
    for l in 1..=3 {
        let g = chvatal_family(l).unwrap();
        let r = run_engine(&g).unwrap();
        let RunOutcome::NoTwoFactor { cut: Some(s) } = &r.outcome else {
            panic!("l = {l}: {:?}", r.outcome)
        };
        assert!(g.component_count_without(s) * 2 > s.len());
        check_outcome(&g, &r.outcome);
    }
}

#[test]
fn two_triangles_joined_by_a_matching_merge() {
    let g = Graph::from_edge_list(
        6,
        [
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (0, 3),
            (1, 4),
        ],
    )
    .unwrap();
    let tri = |a, b, c| toughham_core::OrientedCycle::new(&g, vec![a, b, c]).unwrap();
    let f = TwoFactor::new(&g, vec![tri(0, 1, 2), tri(3, 4, 5)]).unwrap();
    let merged = direct_merge_scan(&g, &f).unwrap();
    assert_eq!(merged.omega(), 1);
    verify_certificate(&g, &Certificate::SmallerTwoFactor(merged), Some(&f)).unwrap();
}

/// A-type by the definition: some other cycle has two consecutive vertices
/// both adjacent to x.
fn naive_a_type(g: &Graph, f: &TwoFactor, x: usize) -> bool {
    let own = f.cycle_of(x);
    f.cycles().iter().enumerate().any(|(i, c)| {
        i != own
            && c.vertices()
                .iter()
                .any(|&y| g.has_edge(x, y) && g.has_edge(x, c.succ(y)))
    })
}

fn free_graph() -> impl Strategy<Value = Graph> {
    (5usize..=11, 40u32..=95, any::<u64>()).prop_filter_map("repair budget", |(n, p, seed)| {
        random_2k2_free(n, p as f64 / 100.0, seed, 10_000).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn runs_are_sound_and_never_stuck(g in free_graph()) {
        let r = run_engine(&g).unwrap();
        check_outcome(&g, &r.outcome);
        prop_assert!(r.omega_trajectory.windows(2).all(|w| w[1] < w[0]));
        let hamiltonian = matches!(r.outcome, RunOutcome::Hamiltonian { .. });
        let t = toughness(&g).unwrap().value;
        if t.at_least(Rational::from_integer(2)) {
            prop_assert!(hamiltonian);
        }
        if hamiltonian {
            prop_assert!(hamiltonian_cycle_bruteforce(&g).unwrap().is_some());
        }
    }

    #[test]
    fn minimum_start_never_progresses(g in free_graph()) {
        let options = EngineOptions { start: StartFactor::Minimum, ..EngineOptions::default() };
        let r = run_engine_with(&g, &options).unwrap();
        check_outcome(&g, &r.outcome);
        if let Some(&first) = r.omega_trajectory.first() {
            // a minimum factor cannot be merged further
            prop_assert_eq!(r.omega_trajectory.len(), 1, "started at {}", first);
        }
    }

    #[test]
    fn classification_matches_the_definition(g in free_graph()) {
        prop_assume!(is_2k2_free(&g).is_none());
        let Some(f) = find_two_factor(&g) else { return Ok(()) };
        if f.omega() < 2 {
            return Ok(());
        }
        let cls = classify(&g, &f);
        for x in 0..g.n() {
            prop_assert_eq!(cls.is_a(x), naive_a_type(&g, &f, x), "vertex {}", x);
        }
    }
}

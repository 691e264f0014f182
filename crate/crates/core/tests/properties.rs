mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twohop_core::graph::generate::{cycle_links, random_connected};
use twohop_core::invariants::{
    chordality, is_exactly_one_separated, lambda, nu, verify_elimination_order, verify_hole,
    verify_lambda_witness, Chordality,
};
use twohop_core::perf::{beta_bounds, t1_star, LowerSearch};
use twohop_core::schedule::{
    dual_fractional_chromatic, fractional_chromatic, min_schedule, weighted_clique_number,
};
use twohop_core::sim::run_admission;
use twohop_core::{
    conflict_graph, generate, q, Caps, DemandVector, Family, NetworkGraph, Rational,
};

fn graph_and_demand() -> impl Strategy<Value = (NetworkGraph, DemandVector)> {
    (2usize..=7, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(n, 9, &mut rng);
        let tau = twohop_core::perf::random_demand(g.links(), 4, &mut rng);
        (g, tau)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conflict_graph_matches_definition((g, _) in graph_and_demand(), k in 1usize..=3) {
        let gc = conflict_graph(&g, k).unwrap();
        let brute = common::brute_conflict(&g, k);
        for (i, row) in brute.iter().enumerate() {
            for (j, &hit) in row.iter().enumerate() {
                prop_assert_eq!(gc.graph().has_edge(i, j), hit);
            }
        }
    }

    #[test]
    fn duality_and_clique_bounds((g, tau) in graph_and_demand()) {
        let caps = Caps::default();
        let gc = conflict_graph(&g, 2).unwrap();
        let primal = fractional_chromatic(&gc, &tau, &caps).unwrap();
        prop_assert_eq!(&primal, &dual_fractional_chromatic(&gc, &tau, &caps).unwrap());
        let omega = weighted_clique_number(&gc, &tau, &caps).unwrap();
        let total: Rational = tau.support().map(|(_, v)| v).sum();
        prop_assert!(omega <= primal && primal <= total);
        let s = min_schedule(&gc, &tau, &caps).unwrap();
        prop_assert!(s.is_valid_for(&gc) && s.satisfies(&tau));
        prop_assert_eq!(s.duration(), primal);
    }

    #[test]
    fn local_estimate_never_exceeds_optimum((g, tau) in graph_and_demand()) {
        let caps = Caps::default();
        let total = fractional_chromatic(&conflict_graph(&g, 2).unwrap(), &tau, &caps).unwrap();
        prop_assert!(t1_star(&g, &tau, &caps).unwrap() <= total);
    }

    #[test]
    fn monotone_and_homogeneous((g, tau) in graph_and_demand(), drop in any::<prop::sample::Index>()) {
        let caps = Caps::default();
        let gc = conflict_graph(&g, 2).unwrap();
        let mut smaller = tau.clone();
        let l = &g.links()[drop.index(g.link_count())];
        smaller.set(l.clone(), Rational::zero()).unwrap();
        prop_assert!(smaller.le(&tau));
        let (a, b) = (fractional_chromatic(&gc, &smaller, &caps).unwrap(), fractional_chromatic(&gc, &tau, &caps).unwrap());
        prop_assert!(a <= b);
        prop_assert!(t1_star(&g, &smaller, &caps).unwrap() <= t1_star(&g, &tau, &caps).unwrap());
        prop_assert_eq!(fractional_chromatic(&gc, &tau.scaled(&q(3, 2)), &caps).unwrap(), b * q(3, 2));
    }

    #[test]
    fn invariant_witnesses_verify((g, _) in graph_and_demand()) {
        let caps = Caps::default();
        let (size, matching) = nu(&g, &caps).unwrap();
        prop_assert_eq!(size, matching.len());
        prop_assert!(is_exactly_one_separated(&g, &matching).unwrap());
        let (lam, w) = lambda(&g, &caps).unwrap();
        prop_assert_eq!(lam, w.nodes.len());
        prop_assert!(verify_lambda_witness(&g, &w).unwrap());
        let gc = conflict_graph(&g, 2).unwrap();
        match chordality(&gc) {
            Chordality::Chordal { elimination_order } => prop_assert!(verify_elimination_order(gc.graph(), &elimination_order)),
            Chordality::NotChordal { hole } => prop_assert!(verify_hole(gc.graph(), &hole)),
        }
    }

    #[test]
    fn simulation_is_deterministic_and_monotone((g, tau) in graph_and_demand()) {
        let caps = Caps::default();
        let t = q(1, 2);
        let a = serde_json::to_string(&run_admission(&g, &tau, &t, &caps).unwrap()).unwrap();
        let b = serde_json::to_string(&run_admission(&g, &tau, &t, &caps).unwrap()).unwrap();
        prop_assert_eq!(&a, &b);
        let big = run_admission(&g, &tau, &t, &caps).unwrap();
        let small = run_admission(&g, &tau.scaled(&q(1, 2)), &t, &caps).unwrap();
        if big.global_decision == twohop_core::Decision::Admit {
            prop_assert_eq!(small.global_decision, twohop_core::Decision::Admit);
        }
    }
}

/// Removing a link that is at distance >= 2 from all of `G_v` leaves node
/// `v`'s view and decision unchanged.
#[test]
fn views_are_local() {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let g = random_connected(8, 10, &mut rng);
        let tau = twohop_core::perf::random_demand(g.links(), 4, &mut rng);
        let base = run_admission(&g, &tau, &q(1, 2), &caps).unwrap();
        let d = common::floyd_distances(&g);
        for view in &base.views {
            let c = g.node_id(&view.center).unwrap();
            let ball: Vec<usize> = (0..g.node_count())
                .filter(|&u| d[c][u].is_some_and(|x| x <= 1))
                .collect();
            for l in g.links() {
                let (a, b) = l.endpoints();
                let (a, b) = (g.node_id(a).unwrap(), g.node_id(b).unwrap());
                let far = ball
                    .iter()
                    .all(|&u| d[u][a].is_none_or(|x| x >= 2) && d[u][b].is_none_or(|x| x >= 2));
                if !far {
                    continue;
                }
                let rest: Vec<(String, String)> = g
                    .links()
                    .iter()
                    .filter(|x| *x != l)
                    .map(|x| (x.endpoints().0.to_string(), x.endpoints().1.to_string()))
                    .collect();
                let h = NetworkGraph::build(g.nodes().iter().cloned(), rest).unwrap();
                let tau2 = tau.restricted(h.links());
                let after = run_admission(&h, &tau2, &q(1, 2), &caps).unwrap();
                let same = after
                    .views
                    .iter()
                    .find(|w| w.center == view.center)
                    .unwrap();
                assert_eq!(same.local_value, view.local_value);
                assert_eq!(same.decision, view.decision);
            }
        }
    }
}

#[test]
fn alternate_ring_links_induce_odd_cycle() {
    for k in 2..=4usize {
        let n = 4 * k + 2;
        let g = generate(&Family::Cycle(n)).unwrap();
        let gc = conflict_graph(&g, 2).unwrap();
        let m: Vec<_> = cycle_links(n).into_iter().step_by(2).collect();
        let keep: Vec<usize> = m.iter().map(|l| gc.index_of(l).unwrap()).collect();
        let sub = gc.graph().induced(&keep);
        assert_eq!(sub.len(), 2 * k + 1);
        assert!((0..sub.len()).all(|v| sub.degree(v) == 2));
        assert_eq!(sub.components().len(), 1);
    }
}

#[test]
fn corpus_bounds_use_certified_imperfection() {
    let caps = Caps::default();
    for (name, g) in common::corpus(30, 11) {
        if g.link_count() == 0 {
            continue;
        }
        let b = beta_bounds(&g, &LowerSearch::default(), &caps).unwrap();
        assert!(b.upper.is_some(), "{name}: no certified upper bound");
    }
}

#[test]
fn multicoloring_oracle_on_small_cycles() {
    // frozen values: chi_f(C_5) = 5/2, chi_f(C_7) = 7/3 with unit weights
    for (n, expect) in [(5usize, q(5, 2)), (7, q(7, 3))] {
        let adj: Vec<Vec<bool>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (i + 1) % n == j || (j + 1) % n == i)
                    .collect()
            })
            .collect();
        assert_eq!(
            common::multicoloring_chif(&adj, &vec![Rational::one(); n], 3),
            expect
        );
    }
}

mod common;

use domkit_core::domination::sort_sets;
use domkit_core::{
    bondage_number, domination_number, enumerate_minimum_dominating_sets, is_dominating_set,
    is_total_dominating_set, reinforcement_number, total_bondage_number, total_domination_number,
    CnfFormula, Edge, Graph, PerturbationValue,
};
use proptest::prelude::*;

use common::{naive_gamma, naive_minimum_sets, naive_perturbation, Perturb};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn formula_strategy() -> impl Strategy<Value = CnfFormula> {
    (3usize..=6, 1usize..=6, any::<u64>()).prop_map(|(n, m, seed)| CnfFormula::random(n, m, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn edge_list_roundtrip(g in graph_strategy(14)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn edges_and_non_edges_partition_pairs(g in graph_strategy(14)) {
        let n = g.vertex_count();
        prop_assert_eq!(g.edges().len() + g.non_edges().len(), n * (n - 1) / 2);
        for e in g.non_edges() {
            prop_assert!(!g.contains_edge(e));
        }
    }

    #[test]
    fn remove_then_add_restores(g in graph_strategy(10)) {
        for e in g.edges() {
            let back = g.remove_edges(&[e]).unwrap().add_edges(&[e]).unwrap();
            prop_assert_eq!(&back, &g);
        }
    }

    #[test]
    fn dot_is_deterministic(g in graph_strategy(10)) {
        let hl = domination_number(&g).witness;
        prop_assert_eq!(g.to_dot(None, Some(hl)), g.to_dot(None, Some(hl)));
    }

    #[test]
    fn dimacs_roundtrip(f in formula_strategy()) {
        prop_assert_eq!(CnfFormula::parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn satisfiability_agrees_with_truth_table(f in formula_strategy()) {
        let brute = common::brute_force_satisfiable(&f);
        match f.is_satisfiable() {
            Some(t) => prop_assert!(f.evaluate(&t).unwrap()),
            None => prop_assert!(!brute),
        }
        prop_assert_eq!(f.is_satisfiable().is_some(), brute);
    }

    #[test]
    fn witnesses_are_minimum(g in graph_strategy(10)) {
        let r = domination_number(&g);
        prop_assert!(is_dominating_set(&g, r.witness).unwrap());
        prop_assert_eq!(r.witness.len(), r.value);
        prop_assert_eq!(Some(r.value), naive_gamma(&g, false));
        match total_domination_number(&g) {
            Ok(t) => {
                prop_assert!(is_total_dominating_set(&g, t.witness).unwrap());
                prop_assert_eq!(Some(t.value), naive_gamma(&g, true));
                prop_assert!(t.value >= r.value);
            }
            Err(_) => prop_assert!(g.has_isolated_vertex()),
        }
    }

    #[test]
    fn enumeration_is_complete(g in graph_strategy(9)) {
        let as_lists = |sets: Vec<domkit_core::VertexSet>| -> Vec<Vec<usize>> {
            sets.into_iter().map(|s| s.to_vec()).collect()
        };
        let mut got = enumerate_minimum_dominating_sets(&g, false).unwrap();
        let before = got.clone();
        sort_sets(&mut got);
        prop_assert_eq!(&got, &before);
        prop_assert_eq!(as_lists(got), naive_minimum_sets(&g, false));
        if !g.has_isolated_vertex() {
            let got = enumerate_minimum_dominating_sets(&g, true).unwrap();
            prop_assert_eq!(as_lists(got), naive_minimum_sets(&g, true));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn bondage_matches_sweep(g in graph_strategy(7), cap in 1usize..=2) {
        prop_assume!(g.edge_count() >= cap);
        let got = bondage_number(&g, cap).unwrap();
        prop_assert_eq!((got.value, got.witness.clone()), naive_perturbation(&g, cap, Perturb::Bondage));
        if let PerturbationValue::Value(k) = got.value {
            // minimality: no smaller set raises γ
            let gamma = domination_number(&g).value;
            let h = g.remove_edges(&got.witness).unwrap();
            prop_assert!(domination_number(&h).value > gamma);
            if k > 1 {
                prop_assert_ne!(naive_perturbation(&g, k - 1, Perturb::Bondage).0, PerturbationValue::Value(k - 1));
            }
        }
    }

    #[test]
    fn total_bondage_matches_sweep(g in graph_strategy(7), cap in 1usize..=2) {
        prop_assume!(!g.has_isolated_vertex() && g.edge_count() >= cap);
        let got = total_bondage_number(&g, cap).unwrap();
        prop_assert_eq!((got.value, got.witness.clone()), naive_perturbation(&g, cap, Perturb::TotalBondage));
        if !got.witness.is_empty() {
            let h = g.remove_edges(&got.witness).unwrap();
            prop_assert!(!h.has_isolated_vertex());
        }
    }

    #[test]
    fn reinforcement_matches_sweep(g in graph_strategy(7), cap in 1usize..=2) {
        prop_assume!(g.non_edges().len() >= cap);
        let got = reinforcement_number(&g, cap).unwrap();
        prop_assert_eq!((got.value, got.witness.clone()), naive_perturbation(&g, cap, Perturb::Reinforcement));
        if !got.witness.is_empty() {
            let h = g.add_edges(&got.witness).unwrap();
            prop_assert!(domination_number(&h).value < domination_number(&g).value);
        }
    }

    #[test]
    fn single_edge_monotonicity(g in graph_strategy(11)) {
        let gamma = domination_number(&g).value;
        for e in g.edges() {
            prop_assert!(domination_number(&g.remove_edges(&[e]).unwrap()).value >= gamma);
        }
        for e in g.non_edges() {
            prop_assert!(domination_number(&g.add_edges(&[e]).unwrap()).value <= gamma);
        }
    }
}

#[test]
fn witness_is_independent_of_worker_count() {
    let g = Graph::from_edges(8, (0..8).map(|i| (i, (i + 1) % 8)).chain([(0, 4)])).unwrap();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| {
                (
                    bondage_number(&g, 3).unwrap(),
                    reinforcement_number(&g, 2).unwrap(),
                    enumerate_minimum_dominating_sets(&g, false).unwrap(),
                )
            })
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn larger_graph_uses_wide_masks() {
    // A path on 120 vertices: γ(P_n) = ⌈n/3⌉.
    let g = Graph::from_edges(120, (1..120).map(|i| (i - 1, i))).unwrap();
    assert_eq!(domination_number(&g).value, 40);
    let e = Edge::new(118, 119).unwrap();
    assert!(g.contains_edge(e));
}

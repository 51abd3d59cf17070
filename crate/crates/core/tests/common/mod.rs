//! Test-only oracles: plain subset sweeps with no pruning, written against
//! raw adjacency so they share no code path with the solvers.

#![allow(dead_code)]

use domkit_core::{CnfFormula, Edge, Graph, PerturbationValue};
use rand::Rng;

pub fn fixture(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn example_formula() -> CnfFormula {
    CnfFormula::parse_dimacs(&fixture("example.cnf")).unwrap()
}

pub fn complete_formula() -> CnfFormula {
    CnfFormula::parse_dimacs(&fixture("complete3.cnf")).unwrap()
}

/// Exhaustive 2^n truth-table check, independent of `is_satisfiable`.
pub fn brute_force_satisfiable(f: &CnfFormula) -> bool {
    let n = f.variable_count();
    (0u64..1 << n).any(|bits| {
        f.clauses().iter().all(|c| {
            c.literals()
                .iter()
                .any(|l| (bits >> (l.variable() - 1) & 1 == 1) != l.is_negated())
        })
    })
}

/// G(n, p) with `p` drawn per graph.
pub fn random_graph(rng: &mut impl Rng, max_n: usize) -> Graph {
    let n = rng.random_range(1..=max_n);
    let p: f64 = rng.random_range(0.15..0.85);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn dominates(g: &Graph, mask: u128, total: bool) -> bool {
    (0..g.vertex_count()).all(|v| {
        let self_counts = !total && mask >> v & 1 == 1;
        self_counts || (0..g.vertex_count()).any(|u| mask >> u & 1 == 1 && g.has_edge(u, v))
    })
}

/// Minimum (total) dominating set size by sweeping subsets in increasing
/// size. `None` when total domination is undefined.
pub fn naive_gamma(g: &Graph, total: bool) -> Option<usize> {
    let n = g.vertex_count();
    assert!(n <= 16, "naive sweep is for small graphs");
    if total && (0..n).any(|v| g.degree(v) == 0) {
        return None;
    }
    (0..=n).find(|&k| {
        (0u128..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .any(|m| dominates(g, m, total))
    })
}

/// Every minimum (total) dominating set, as sorted member lists.
pub fn naive_minimum_sets(g: &Graph, total: bool) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let k = naive_gamma(g, total).unwrap();
    let mut out: Vec<Vec<usize>> = (0u128..1 << n)
        .filter(|m| m.count_ones() as usize == k && dominates(g, *m, total))
        .map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// k-subsets of `0..len` in lexicographic order.
pub fn combinations(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            rec(i + 1, len, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, len, k, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Perturb {
    Bondage,
    TotalBondage,
    Reinforcement,
}

/// Smallest qualifying edge set by sweep, with its lexicographically first
/// witness, using only the naive γ oracle.
pub fn naive_perturbation(g: &Graph, cap: usize, mode: Perturb) -> (PerturbationValue, Vec<Edge>) {
    let base = naive_gamma(g, mode == Perturb::TotalBondage).unwrap();
    if mode == Perturb::Reinforcement && base <= 1 {
        return (PerturbationValue::Zero, Vec::new());
    }
    let pool = match mode {
        Perturb::Reinforcement => g.non_edges(),
        _ => g.edges(),
    };
    for k in 1..=cap {
        for idx in combinations(pool.len(), k) {
            let set: Vec<Edge> = idx.iter().map(|&i| pool[i]).collect();
            let hit = match mode {
                Perturb::Bondage => naive_gamma(&g.remove_edges(&set).unwrap(), false).unwrap() > base,
                Perturb::TotalBondage => {
                    naive_gamma(&g.remove_edges(&set).unwrap(), true).is_some_and(|v| v > base)
                }
                Perturb::Reinforcement => naive_gamma(&g.add_edges(&set).unwrap(), false).unwrap() < base,
            };
            if hit {
                return (PerturbationValue::Value(k), set);
            }
        }
    }
    (PerturbationValue::Nonexistent, Vec::new())
}

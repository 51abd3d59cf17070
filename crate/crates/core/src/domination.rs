//! Exact domination and total domination numbers.
//!
//! Both problems are set covers of the vertex set: a dominating set covers
//! with closed neighborhoods `N[v]`, a total dominating set with open
//! neighborhoods `N(v)`. The search branches on the undominated vertex with
//! the fewest remaining dominators. Branch `i` takes the `i`-th dominator
//! and bans dominators `0..i` for the rest of that subtree, so every cover
//! is reached along exactly one path. That property makes the same search
//! usable for decision, optimization and full enumeration.

use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominationError {
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("total domination is undefined: vertex {0} is isolated")]
    IsolatedVertex(usize),
}

/// Which neighborhood a chosen vertex covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DominationKind {
    /// Closed neighborhoods: `γ`.
    Ordinary,
    /// Open neighborhoods: `γ_t`.
    Total,
}

/// A minimum (total) dominating set together with its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub value: usize,
    pub witness: VertexSet,
}

pub fn is_dominating_set(g: &Graph, d: VertexSet) -> Result<bool, DominationError> {
    check_members(g, d)?;
    Ok(covered(g, d, DominationKind::Ordinary) == g.vertices())
}

/// `d` dominates `g` and every member of `d` has a neighbor in `d`.
pub fn is_total_dominating_set(g: &Graph, d: VertexSet) -> Result<bool, DominationError> {
    check_members(g, d)?;
    Ok(covered(g, d, DominationKind::Total) == g.vertices())
}

pub fn domination_number(g: &Graph) -> DominationResult {
    minimum(g, DominationKind::Ordinary).expect("γ is defined for every graph")
}

pub fn total_domination_number(g: &Graph) -> Result<DominationResult, DominationError> {
    minimum(g, DominationKind::Total)
}

/// γ or γ_t depending on `kind`.
pub fn minimum(g: &Graph, kind: DominationKind) -> Result<DominationResult, DominationError> {
    let search = CoverSearch::new(g, kind)?;
    for k in search.lower_bound()..=g.vertex_count() {
        if let Some(witness) = search.find(k) {
            return Ok(DominationResult {
                value: witness.len(),
                witness,
            });
        }
    }
    unreachable!("the full vertex set dominates any graph without isolated vertices")
}

/// Some (total) dominating set of size at most `budget`, if one exists.
pub fn dominating_set_within(
    g: &Graph,
    kind: DominationKind,
    budget: usize,
) -> Result<Option<VertexSet>, DominationError> {
    Ok(CoverSearch::new(g, kind)?.find(budget))
}

/// Every minimum (total) dominating set, sorted by member list.
pub fn enumerate_minimum_dominating_sets(
    g: &Graph,
    total: bool,
) -> Result<Vec<VertexSet>, DominationError> {
    let kind = if total {
        DominationKind::Total
    } else {
        DominationKind::Ordinary
    };
    let value = minimum(g, kind)?.value;
    let search = CoverSearch::new(g, kind)?;
    let mut sets = search.enumerate(value);
    sort_sets(&mut sets);
    Ok(sets)
}

/// Sorts vertex sets lexicographically by their ascending member lists.
pub fn sort_sets(sets: &mut [VertexSet]) {
    sets.sort_by_cached_key(|s| s.to_vec());
}

fn check_members(g: &Graph, d: VertexSet) -> Result<(), DominationError> {
    if d.upper_bound() > g.vertex_count() {
        return Err(DominationError::VertexOutOfRange {
            vertex: d.upper_bound() - 1,
            vertex_count: g.vertex_count(),
        });
    }
    Ok(())
}

fn covered(g: &Graph, d: VertexSet, kind: DominationKind) -> VertexSet {
    d.iter().fold(VertexSet::empty(), |acc, v| {
        let reach = match kind {
            DominationKind::Ordinary => g.neighbors(v).with(v),
            DominationKind::Total => g.neighbors(v),
        };
        acc.union(reach)
    })
}

struct CoverSearch {
    /// `reach[v]`: what `v` covers. Symmetric, so it is also the set of
    /// vertices that cover `v`.
    reach: Vec<VertexSet>,
    all: VertexSet,
    max_reach: usize,
}

impl CoverSearch {
    fn new(g: &Graph, kind: DominationKind) -> Result<Self, DominationError> {
        if kind == DominationKind::Total {
            if let Some(v) = g.isolated_vertices().first() {
                return Err(DominationError::IsolatedVertex(v));
            }
        }
        let reach: Vec<VertexSet> = (0..g.vertex_count())
            .map(|v| match kind {
                DominationKind::Ordinary => g.neighbors(v).with(v),
                DominationKind::Total => g.neighbors(v),
            })
            .collect();
        let max_reach = reach.iter().map(|r| r.len()).max().unwrap_or(0);
        Ok(CoverSearch {
            reach,
            all: g.vertices(),
            max_reach,
        })
    }

    /// `⌈n / (Δ + 1)⌉` for γ, `⌈n / Δ⌉` for γ_t.
    fn lower_bound(&self) -> usize {
        let n = self.all.len();
        if n == 0 {
            0
        } else {
            n.div_ceil(self.max_reach)
        }
    }

    fn find(&self, budget: usize) -> Option<VertexSet> {
        let mut found = None;
        let _ = self.search(self.all, self.all, budget, VertexSet::empty(), &mut |s| {
            found = Some(s);
            ControlFlow::Break(())
        });
        found
    }

    /// All covers of size at most `budget` that are reachable without a
    /// redundant pick. With `budget` equal to the optimum this is every
    /// minimum cover, each exactly once.
    fn enumerate(&self, budget: usize) -> Vec<VertexSet> {
        let undominated = self.all;
        if undominated.is_empty() {
            return vec![VertexSet::empty()];
        }
        if budget == 0 {
            return Vec::new();
        }
        let Some((_, options)) = self.branch_vertex(undominated, self.all) else {
            return Vec::new();
        };
        let options = self.order(options, undominated);
        // Top-level branches are independent; split them across workers.
        let mut banned = VertexSet::empty();
        let branches: Vec<(usize, VertexSet)> = options
            .iter()
            .map(|&c| {
                let b = (c, banned);
                banned.insert(c);
                b
            })
            .collect();
        branches
            .into_par_iter()
            .flat_map_iter(|(c, banned)| {
                let mut out = Vec::new();
                let allowed = self.all.difference(banned).difference(VertexSet::singleton(c));
                let _ = self.search(
                    undominated.difference(self.reach[c]),
                    allowed,
                    budget - 1,
                    VertexSet::singleton(c),
                    &mut |s| {
                        out.push(s);
                        ControlFlow::Continue(())
                    },
                );
                out
            })
            .collect()
    }

    fn search(
        &self,
        undominated: VertexSet,
        allowed: VertexSet,
        budget: usize,
        chosen: VertexSet,
        visit: &mut dyn FnMut(VertexSet) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if undominated.is_empty() {
            return visit(chosen);
        }
        if budget == 0 || !self.can_cover(undominated, allowed, budget) {
            return ControlFlow::Continue(());
        }
        let Some((_, options)) = self.branch_vertex(undominated, allowed) else {
            return ControlFlow::Continue(());
        };
        let mut allowed = allowed;
        for c in self.order(options, undominated) {
            allowed.remove(c);
            self.search(
                undominated.difference(self.reach[c]),
                allowed,
                budget - 1,
                chosen.with(c),
                visit,
            )?;
        }
        ControlFlow::Continue(())
    }

    /// The undominated vertex with the fewest allowed dominators. `None`
    /// when some undominated vertex has no allowed dominator left.
    fn branch_vertex(&self, undominated: VertexSet, allowed: VertexSet) -> Option<(usize, VertexSet)> {
        let mut best: Option<(usize, VertexSet)> = None;
        for w in undominated {
            let options = self.reach[w].intersection(allowed);
            match options.len() {
                0 => return None,
                k if best.is_none_or(|(_, b)| k < b.len()) => {
                    best = Some((w, options));
                    if k == 1 {
                        break;
                    }
                }
                _ => {}
            }
        }
        best
    }

    /// Candidates by descending number of newly covered vertices, ties by
    /// ID.
    fn order(&self, options: VertexSet, undominated: VertexSet) -> Vec<usize> {
        let mut v: Vec<usize> = options.to_vec();
        v.sort_by_key(|&c| std::cmp::Reverse(self.reach[c].intersection(undominated).len()));
        v
    }

    /// Upper bound on coverage: the `budget` largest gains among allowed
    /// candidates must reach every undominated vertex.
    fn can_cover(&self, undominated: VertexSet, allowed: VertexSet, budget: usize) -> bool {
        let need = undominated.len();
        if budget * self.max_reach < need {
            return false;
        }
        let mut gains: Vec<usize> = allowed
            .iter()
            .map(|c| self.reach[c].intersection(undominated).len())
            .filter(|&g| g > 0)
            .collect();
        if gains.len() > budget {
            gains.select_nth_unstable_by(budget - 1, |a, b| b.cmp(a));
            gains.truncate(budget);
        }
        gains.iter().sum::<usize>() >= need
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn star3() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    /// Plain subset sweep in increasing size.
    fn naive_min(g: &Graph, total: bool) -> usize {
        let n = g.vertex_count();
        (0..1u128 << n)
            .map(VertexSet::from_bits)
            .filter(|&d| {
                if total {
                    is_total_dominating_set(g, d).unwrap()
                } else {
                    is_dominating_set(g, d).unwrap()
                }
            })
            .map(|d| d.len())
            .min()
            .unwrap()
    }

    #[test]
    fn dominating_set_checks() {
        let p3 = path(3);
        assert!(is_dominating_set(&p3, p3.vertices()).unwrap());
        assert!(is_dominating_set(&star3(), set(&[0])).unwrap());
        assert!(!is_dominating_set(&p3, set(&[0])).unwrap());
        assert!(is_dominating_set(&p3, set(&[5])).is_err());
    }

    #[test]
    fn total_dominating_set_checks() {
        assert!(is_total_dominating_set(&path(2), set(&[0, 1])).unwrap());
        assert!(!is_total_dominating_set(&star3(), set(&[0])).unwrap());
        assert!(!is_total_dominating_set(&path(2), VertexSet::empty()).unwrap());
    }

    #[test]
    fn small_values() {
        assert_eq!(domination_number(&Graph::empty(4).unwrap()).value, 4);
        assert_eq!(domination_number(&cycle(6)).value, 2);
        assert_eq!(total_domination_number(&path(2)).unwrap().value, 2);
        assert_eq!(total_domination_number(&cycle(6)).unwrap().value, 4);
        assert_eq!(domination_number(&Graph::empty(0).unwrap()).value, 0);
    }

    #[test]
    fn frozen_values_match_sweep() {
        // frozen from the subset sweep above
        assert_eq!(naive_min(&cycle(6), false), 2);
        assert_eq!(naive_min(&cycle(6), true), 4);
        assert_eq!(naive_min(&path(4), false), 2);
    }

    #[test]
    fn total_requires_no_isolated_vertex() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            total_domination_number(&g),
            Err(DominationError::IsolatedVertex(2))
        );
        assert!(enumerate_minimum_dominating_sets(&g, true).is_err());
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(enumerate_minimum_dominating_sets(&path(3), false).unwrap(), vec![set(&[1])]);
        assert_eq!(
            enumerate_minimum_dominating_sets(&path(2), true).unwrap(),
            vec![set(&[0, 1])]
        );
        // C_4 sweep: every 2-subset dominates C_4.
        let c4: Vec<VertexSet> = (0..16u128)
            .map(VertexSet::from_bits)
            .filter(|d| d.len() == 2 && is_dominating_set(&cycle(4), *d).unwrap())
            .collect();
        assert_eq!(c4.len(), 6);
        let mut expected = c4;
        sort_sets(&mut expected);
        assert_eq!(enumerate_minimum_dominating_sets(&cycle(4), false).unwrap(), expected);
        assert_eq!(
            enumerate_minimum_dominating_sets(&Graph::empty(0).unwrap(), false).unwrap(),
            vec![VertexSet::empty()]
        );
    }

    #[test]
    fn witnesses_are_valid() {
        for n in 2..9 {
            let r = domination_number(&cycle(n + 1));
            assert!(is_dominating_set(&cycle(n + 1), r.witness).unwrap());
            assert_eq!(r.value, r.witness.len());
            let t = total_domination_number(&path(n)).unwrap();
            assert!(is_total_dominating_set(&path(n), t.witness).unwrap());
            assert_eq!(t.value, naive_min(&path(n), true));
        }
    }

    #[test]
    fn decision_query() {
        assert_eq!(dominating_set_within(&cycle(6), DominationKind::Ordinary, 1).unwrap(), None);
        let d = dominating_set_within(&cycle(6), DominationKind::Ordinary, 3).unwrap().unwrap();
        assert!(d.len() <= 3 && is_dominating_set(&cycle(6), d).unwrap());
    }
}

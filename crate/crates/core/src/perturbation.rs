//! Bondage, total bondage and reinforcement numbers by exhaustive edge-set
//! search.
//!
//! Candidate edge sets are tried by ascending size and, within one size, in
//! lexicographic order of edge indices. Each size is scanned in parallel
//! chunks with `find_first`, so the reported witness is the
//! lexicographically first qualifying set regardless of worker count.
//!
//! Removing edges never lowers γ or γ_t, and adding edges never raises γ.
//! So "γ strictly increases" reduces to "no dominating set of the old size
//! survives", which is a single bounded decision query.

use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::domination::{dominating_set_within, minimum, DominationKind};
use crate::graph::{Edge, Graph};

/// Edge sets scanned per parallel batch.
const CHUNK: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PerturbationError {
    #[error("the graph has no edges")]
    EdgelessGraph,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("cap must be at least 1")]
    ZeroCap,
    #[error("cap {cap} exceeds the {available} candidate edges")]
    CapTooLarge { cap: usize, available: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PerturbationValue {
    /// Smallest qualifying edge-set size.
    Value(usize),
    /// No qualifying set of size at most the cap.
    Nonexistent,
    /// Reinforcement of a graph with γ = 1.
    Zero,
}

impl PerturbationValue {
    pub fn as_count(self) -> Option<usize> {
        match self {
            PerturbationValue::Value(k) => Some(k),
            PerturbationValue::Zero => Some(0),
            PerturbationValue::Nonexistent => None,
        }
    }
}

impl fmt::Display for PerturbationValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PerturbationValue::Value(k) => write!(f, "{k}"),
            PerturbationValue::Nonexistent => f.write_str("NONEXISTENT"),
            PerturbationValue::Zero => f.write_str("ZERO"),
        }
    }
}

impl Serialize for PerturbationValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            PerturbationValue::Value(k) => serializer.serialize_u64(*k as u64),
            other => serializer.serialize_str(&other.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerturbationResult {
    pub value: PerturbationValue,
    /// Empty for the marker values.
    pub witness: Vec<Edge>,
}

impl PerturbationResult {
    fn from_search(found: Option<Vec<Edge>>) -> Self {
        match found {
            Some(witness) => PerturbationResult {
                value: PerturbationValue::Value(witness.len()),
                witness,
            },
            None => PerturbationResult {
                value: PerturbationValue::Nonexistent,
                witness: Vec::new(),
            },
        }
    }

    pub fn is_one(&self) -> bool {
        self.value == PerturbationValue::Value(1)
    }
}

/// `b(g)`: fewest edges whose removal raises γ, searched up to `cap`.
pub fn bondage_number(g: &Graph, cap: usize) -> Result<PerturbationResult, PerturbationError> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(PerturbationError::EdgelessGraph);
    }
    check_cap(cap, edges.len())?;
    let gamma = minimum(g, DominationKind::Ordinary).expect("γ is total").value;
    let found = first_qualifying(&edges, cap, |b| {
        let h = g.remove_edges(b).expect("candidates are edges of g");
        dominating_set_within(&h, DominationKind::Ordinary, gamma)
            .expect("γ is total")
            .is_none()
    });
    Ok(PerturbationResult::from_search(found))
}

/// `b_t(g)`: fewest edges whose removal raises γ_t. Edge sets that leave an
/// isolated vertex are not candidates.
pub fn total_bondage_number(g: &Graph, cap: usize) -> Result<PerturbationResult, PerturbationError> {
    if let Some(v) = g.isolated_vertices().first() {
        return Err(PerturbationError::IsolatedVertex(v));
    }
    let edges = g.edges();
    if edges.is_empty() {
        return Err(PerturbationError::EdgelessGraph);
    }
    check_cap(cap, edges.len())?;
    let gamma_t = minimum(g, DominationKind::Total)
        .map_err(|_| PerturbationError::EdgelessGraph)?
        .value;
    let found = first_qualifying(&edges, cap, |b| {
        let h = g.remove_edges(b).expect("candidates are edges of g");
        !h.has_isolated_vertex()
            && dominating_set_within(&h, DominationKind::Total, gamma_t)
                .expect("no isolated vertex")
                .is_none()
    });
    Ok(PerturbationResult::from_search(found))
}

/// `r(g)`: fewest added edges that lower γ. Graphs with γ = 1 report
/// [`PerturbationValue::Zero`].
pub fn reinforcement_number(g: &Graph, cap: usize) -> Result<PerturbationResult, PerturbationError> {
    let gamma = minimum(g, DominationKind::Ordinary).expect("γ is total").value;
    if gamma <= 1 {
        return Ok(PerturbationResult {
            value: PerturbationValue::Zero,
            witness: Vec::new(),
        });
    }
    let pool = g.non_edges();
    check_cap(cap, pool.len())?;
    let found = first_qualifying(&pool, cap, |a| {
        let h = g.add_edges(a).expect("candidates are non-edges of g");
        dominating_set_within(&h, DominationKind::Ordinary, gamma - 1)
            .expect("γ is total")
            .is_some()
    });
    Ok(PerturbationResult::from_search(found))
}

fn check_cap(cap: usize, available: usize) -> Result<(), PerturbationError> {
    if cap == 0 {
        return Err(PerturbationError::ZeroCap);
    }
    if cap > available {
        return Err(PerturbationError::CapTooLarge { cap, available });
    }
    Ok(())
}

/// Lexicographically first subset of `pool` (smallest size first, at most
/// `cap`) satisfying `qualifies`.
pub(crate) fn first_qualifying<F>(pool: &[Edge], cap: usize, qualifies: F) -> Option<Vec<Edge>>
where
    F: Fn(&[Edge]) -> bool + Sync,
{
    for k in 1..=cap.min(pool.len()) {
        let subsets = (0..pool.len()).combinations(k);
        for chunk in &subsets.chunks(CHUNK) {
            let batch: Vec<Vec<usize>> = chunk.collect();
            let hit = batch.par_iter().find_first(|idx| {
                let set: Vec<Edge> = idx.iter().map(|&i| pool[i]).collect();
                qualifies(&set)
            });
            if let Some(idx) = hit {
                return Some(idx.iter().map(|&i| pool[i]).collect());
            }
        }
    }
    None
}

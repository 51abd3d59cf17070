//! Fixtures shared by the benchmarks.

use domkit_core::{Clause, CnfFormula, Graph};

fn clause(lits: [i64; 3]) -> Clause {
    Clause::from_dimacs(lits).expect("valid clause")
}

/// `(u1 ∨ u2 ∨ ¬u3) ∧ (¬u1 ∨ u2 ∨ u4) ∧ (¬u2 ∨ u3 ∨ u4)`, the running example.
pub fn example_formula() -> CnfFormula {
    let clauses = [[1, 2, -3], [-1, 2, 4], [-2, 3, 4]].map(clause);
    CnfFormula::new(4, clauses.to_vec()).expect("valid formula")
}

/// All eight sign patterns over three variables; unsatisfiable.
pub fn complete_formula() -> CnfFormula {
    let clauses = (0..8)
        .map(|bits: i64| clause([1, 2, 3].map(|v| if bits >> (v - 1) & 1 == 1 { -v } else { v })))
        .collect();
    CnfFormula::new(3, clauses).expect("valid formula")
}

/// A cycle on `n` vertices.
pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

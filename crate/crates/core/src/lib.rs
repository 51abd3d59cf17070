//! Exact domination-type graph parameters and the 3-SAT gadget reductions
//! for bondage, total bondage and reinforcement.
//!
//! - [`graph`]: immutable simple graphs over dense IDs with bitmask
//!   neighborhoods, edge-list and DOT I/O.
//! - [`cnf`]: 3-SAT formulas, DIMACS I/O, exhaustive satisfiability.
//! - [`domination`]: exact `γ` and `γ_t` with witnesses and enumeration of
//!   all minimum sets.
//! - [`perturbation`]: exact bondage, total bondage and reinforcement
//!   numbers up to a cap.
//! - [`reduction`]: the three gadget constructions with role maps.
//! - [`verifier`]: checks every structural claim about the gadget graphs on
//!   a concrete formula and reports the outcome per claim.

pub mod cnf;
pub mod domination;
pub mod graph;
pub mod perturbation;
pub mod reduction;
pub mod verifier;

pub use cnf::{Assignment, Clause, CnfError, CnfFormula, Literal};
pub use domination::{
    domination_number, enumerate_minimum_dominating_sets, is_dominating_set,
    is_total_dominating_set, total_domination_number, DominationError, DominationKind,
    DominationResult,
};
pub use graph::{Edge, Graph, GraphError, VertexSet, MAX_VERTICES};
pub use perturbation::{
    bondage_number, reinforcement_number, total_bondage_number, PerturbationError,
    PerturbationResult, PerturbationValue,
};
pub use reduction::{
    build_bondage_instance, build_reinforcement_instance, build_total_bondage_instance,
    ReductionArtifact, ReductionError, ReductionTarget, VertexRole,
};

pub use verifier::{
    assignment_from_gamma_set, gamma_set_from_assignment, verify, ClaimId, ClaimOutcome,
    VerificationReport, VerifyError,
};

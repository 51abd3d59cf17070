//! Gadget graphs built from a 3-SAT formula for the bondage, total bondage
//! and reinforcement decision problems, each with threshold `k = 1`.
//!
//! Vertex layout, for `i = 1..=n` ascending: `u_i, ū_i, v_i` (plus `v_i'`
//! for total bondage), then `c_1..c_m`, then the spine `s_1..s_3`,
//! `s_1..s_5`, or the single hub `s` (stored as `s_1`).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cnf::{CnfFormula, Literal};
use crate::graph::{Graph, GraphError, VertexSet};
use VertexRole::{Apex, ApexPendant, Clause, NegLiteral, PosLiteral, Spine};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("unknown reduction target `{0}`")]
    UnknownTarget(String),
    #[error("unrecognized vertex role `{0}`")]
    BadRole(String),
    #[error("role map: {0}")]
    RoleMap(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionTarget {
    Bondage,
    TotalBondage,
    Reinforcement,
}

impl ReductionTarget {
    pub const ALL: [ReductionTarget; 3] = [
        ReductionTarget::Bondage,
        ReductionTarget::TotalBondage,
        ReductionTarget::Reinforcement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReductionTarget::Bondage => "bondage",
            ReductionTarget::TotalBondage => "total-bondage",
            ReductionTarget::Reinforcement => "reinforcement",
        }
    }

    /// Number of spine vertices.
    pub fn spine_len(self) -> usize {
        match self {
            ReductionTarget::Bondage => 3,
            ReductionTarget::TotalBondage => 5,
            ReductionTarget::Reinforcement => 1,
        }
    }

    fn gadget_len(self) -> usize {
        match self {
            ReductionTarget::TotalBondage => 4,
            _ => 3,
        }
    }

    pub fn build(self, f: &CnfFormula) -> ReductionArtifact {
        match self {
            ReductionTarget::Bondage => build_bondage_instance(f),
            ReductionTarget::TotalBondage => build_total_bondage_instance(f),
            ReductionTarget::Reinforcement => build_reinforcement_instance(f),
        }
    }
}

impl fmt::Display for ReductionTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReductionTarget {
    type Err = ReductionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bondage" => Ok(ReductionTarget::Bondage),
            "total-bondage" => Ok(ReductionTarget::TotalBondage),
            "reinforcement" => Ok(ReductionTarget::Reinforcement),
            other => Err(ReductionError::UnknownTarget(other.to_string())),
        }
    }
}

/// What a vertex stands for in a gadget graph. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexRole {
    /// `u_i`
    PosLiteral(usize),
    /// `ū_i`
    NegLiteral(usize),
    /// `v_i`
    Apex(usize),
    /// `v_i'`
    ApexPendant(usize),
    /// `c_j`
    Clause(usize),
    /// `s_k`
    Spine(usize),
}

impl VertexRole {
    pub fn literal(lit: Literal) -> Self {
        if lit.is_negated() {
            VertexRole::NegLiteral(lit.variable())
        } else {
            VertexRole::PosLiteral(lit.variable())
        }
    }
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexRole::PosLiteral(i) => write!(f, "u_{i}"),
            VertexRole::NegLiteral(i) => write!(f, "ubar_{i}"),
            VertexRole::Apex(i) => write!(f, "v_{i}"),
            VertexRole::ApexPendant(i) => write!(f, "v'_{i}"),
            VertexRole::Clause(j) => write!(f, "c_{j}"),
            VertexRole::Spine(k) => write!(f, "s_{k}"),
        }
    }
}

impl FromStr for VertexRole {
    type Err = ReductionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ReductionError::BadRole(s.to_string());
        let (kind, index) = s.rsplit_once('_').ok_or_else(bad)?;
        let index: usize = index.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(match kind {
            "u" => VertexRole::PosLiteral(index),
            "ubar" => VertexRole::NegLiteral(index),
            "v" => VertexRole::Apex(index),
            "v'" => VertexRole::ApexPendant(index),
            "c" => VertexRole::Clause(index),
            "s" => VertexRole::Spine(index),
            _ => return Err(bad()),
        })
    }
}

impl Serialize for VertexRole {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexRole {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A gadget graph plus the role of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub graph: Graph,
    roles: Vec<VertexRole>,
    index: HashMap<VertexRole, usize>,
    pub n: usize,
    pub m: usize,
    /// Decision threshold; always 1 for these constructions.
    pub k: usize,
    pub target: ReductionTarget,
}

impl ReductionArtifact {
    pub fn role(&self, v: usize) -> VertexRole {
        self.roles[v]
    }

    pub fn roles(&self) -> &[VertexRole] {
        &self.roles
    }

    /// Vertex ID playing `role`. Panics if the artifact has no such vertex.
    pub fn vertex(&self, role: VertexRole) -> usize {
        self.try_vertex(role)
            .unwrap_or_else(|| panic!("no vertex {role} in the {} artifact", self.target))
    }

    pub fn try_vertex(&self, role: VertexRole) -> Option<usize> {
        self.index.get(&role).copied()
    }

    pub fn u(&self, i: usize) -> usize {
        self.vertex(VertexRole::PosLiteral(i))
    }

    pub fn ubar(&self, i: usize) -> usize {
        self.vertex(VertexRole::NegLiteral(i))
    }

    pub fn v(&self, i: usize) -> usize {
        self.vertex(VertexRole::Apex(i))
    }

    pub fn v_pendant(&self, i: usize) -> usize {
        self.vertex(VertexRole::ApexPendant(i))
    }

    pub fn c(&self, j: usize) -> usize {
        self.vertex(VertexRole::Clause(j))
    }

    pub fn s(&self, k: usize) -> usize {
        self.vertex(VertexRole::Spine(k))
    }

    pub fn literal_vertex(&self, lit: Literal) -> usize {
        self.vertex(VertexRole::literal(lit))
    }

    /// Vertices of the gadget for variable `i`: `T_i` or `H_i`.
    pub fn variable_gadget(&self, i: usize) -> VertexSet {
        let mut set = VertexSet::empty();
        for role in [
            VertexRole::PosLiteral(i),
            VertexRole::NegLiteral(i),
            VertexRole::Apex(i),
            VertexRole::ApexPendant(i),
        ] {
            if let Some(v) = self.try_vertex(role) {
                set.insert(v);
            }
        }
        set
    }

    pub fn clause_vertices(&self) -> VertexSet {
        (1..=self.m).map(|j| self.c(j)).collect()
    }

    pub fn spine_vertices(&self) -> VertexSet {
        (1..=self.target.spine_len()).map(|k| self.s(k)).collect()
    }

    pub fn labels(&self) -> BTreeMap<usize, String> {
        self.roles
            .iter()
            .enumerate()
            .map(|(v, r)| (v, r.to_string()))
            .collect()
    }

    /// Names the vertices of `set` by role, in ID order.
    pub fn describe(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|v| self.roles[v].to_string()).collect()
    }

    /// The sidecar role map: a JSON object from vertex ID to role name.
    pub fn roles_json(&self) -> String {
        let map: BTreeMap<usize, VertexRole> = self.roles.iter().copied().enumerate().collect();
        serde_json::to_string_pretty(&map).expect("role maps serialize")
    }

    /// Reads a role map written by [`ReductionArtifact::roles_json`] and
    /// checks that it covers `0..vertex_count` bijectively.
    pub fn parse_roles_json(text: &str, vertex_count: usize) -> Result<Vec<VertexRole>, ReductionError> {
        let map: BTreeMap<usize, VertexRole> =
            serde_json::from_str(text).map_err(|e| ReductionError::RoleMap(e.to_string()))?;
        if map.len() != vertex_count || map.keys().copied().ne(0..vertex_count) {
            return Err(ReductionError::RoleMap(format!(
                "expected roles for vertices 0..{vertex_count}"
            )));
        }
        let roles: Vec<VertexRole> = map.into_values().collect();
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = roles.iter().find(|r| !seen.insert(**r)) {
            return Err(ReductionError::RoleMap(format!("role {dup} assigned twice")));
        }
        Ok(roles)
    }

    pub fn to_dot(&self, highlight: Option<VertexSet>) -> String {
        self.graph.to_dot(Some(&self.labels()), highlight)
    }
}

/// Assigns IDs in layout order and records edges by role.
struct Builder {
    roles: Vec<VertexRole>,
    index: HashMap<VertexRole, usize>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new(f: &CnfFormula, target: ReductionTarget) -> Self {
        let mut b = Builder {
            roles: Vec::new(),
            index: HashMap::new(),
            edges: Vec::new(),
        };
        for i in 1..=f.variable_count() {
            b.add(VertexRole::PosLiteral(i));
            b.add(VertexRole::NegLiteral(i));
            b.add(VertexRole::Apex(i));
            if target.gadget_len() == 4 {
                b.add(VertexRole::ApexPendant(i));
            }
        }
        for j in 1..=f.clause_count() {
            b.add(VertexRole::Clause(j));
        }
        for k in 1..=target.spine_len() {
            b.add(VertexRole::Spine(k));
        }
        b
    }

    fn add(&mut self, role: VertexRole) {
        self.index.insert(role, self.roles.len());
        self.roles.push(role);
    }

    fn join(&mut self, a: VertexRole, b: VertexRole) {
        self.edges.push((self.index[&a], self.index[&b]));
    }

    /// Edges `c_j x` for every literal `x` of clause `j`.
    fn wire_clauses(&mut self, f: &CnfFormula) {
        for (j, clause) in f.clauses().iter().enumerate() {
            for &lit in clause.literals() {
                self.join(VertexRole::Clause(j + 1), VertexRole::literal(lit));
            }
        }
    }

    fn finish(self, f: &CnfFormula, target: ReductionTarget) -> ReductionArtifact {
        let graph = Graph::from_edges(self.roles.len(), self.edges)
            .expect("gadget edges join distinct in-range vertices");
        ReductionArtifact {
            graph,
            roles: self.roles,
            index: self.index,
            n: f.variable_count(),
            m: f.clause_count(),
            k: 1,
            target,
        }
    }
}

/// Triangles `T_i = {u_i, ū_i, v_i}`, clause vertices wired to their
/// literals, a path `s_1 s_2 s_3`, and `s_1`, `s_3` joined to every `c_j`.
/// `3n + m + 3` vertices, `3n + 5m + 2` edges.
pub fn build_bondage_instance(f: &CnfFormula) -> ReductionArtifact {
    let target = ReductionTarget::Bondage;
    let mut b = Builder::new(f, target);
    for i in 1..=f.variable_count() {
        b.join(PosLiteral(i), NegLiteral(i));
        b.join(PosLiteral(i), Apex(i));
        b.join(NegLiteral(i), Apex(i));
    }
    b.wire_clauses(f);
    b.join(Spine(1), Spine(2));
    b.join(Spine(2), Spine(3));
    for j in 1..=f.clause_count() {
        b.join(Spine(1), Clause(j));
        b.join(Spine(3), Clause(j));
    }
    b.finish(f, target)
}

/// `H_i` with edges `v_i u_i, u_i ū_i, ū_i v_i, v_i v_i'`, clause vertices
/// wired to their literals, the spine graph `H` on `s_1..s_5` with edges
/// `s_1 s_2, s_1 s_4, s_2 s_3, s_2 s_4, s_4 s_5`, and `s_1`, `s_3` joined to
/// every `c_j`. `4n + m + 5` vertices, `4n + 5m + 5` edges.
pub fn build_total_bondage_instance(f: &CnfFormula) -> ReductionArtifact {
    let target = ReductionTarget::TotalBondage;
    let mut b = Builder::new(f, target);
    for i in 1..=f.variable_count() {
        b.join(Apex(i), PosLiteral(i));
        b.join(PosLiteral(i), NegLiteral(i));
        b.join(NegLiteral(i), Apex(i));
        b.join(Apex(i), ApexPendant(i));
    }
    b.wire_clauses(f);
    for (x, y) in [(1, 2), (1, 4), (2, 3), (2, 4), (4, 5)] {
        b.join(Spine(x), Spine(y));
    }
    for j in 1..=f.clause_count() {
        b.join(Spine(1), Clause(j));
        b.join(Spine(3), Clause(j));
    }
    b.finish(f, target)
}

/// Triangles `T_i`, clause vertices wired to their literals, and a hub `s`
/// joined to every `c_j`. `3n + m + 1` vertices, `3n + 4m` edges.
pub fn build_reinforcement_instance(f: &CnfFormula) -> ReductionArtifact {
    let target = ReductionTarget::Reinforcement;
    let mut b = Builder::new(f, target);
    for i in 1..=f.variable_count() {
        b.join(PosLiteral(i), NegLiteral(i));
        b.join(PosLiteral(i), Apex(i));
        b.join(NegLiteral(i), Apex(i));
    }
    b.wire_clauses(f);
    for j in 1..=f.clause_count() {
        b.join(Spine(1), Clause(j));
    }
    b.finish(f, target)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_formula() -> CnfFormula {
        CnfFormula::parse_dimacs("p cnf 4 3\n1 2 -3 0\n-1 2 4 0\n-2 3 4 0").unwrap()
    }

    fn counts(a: &ReductionArtifact) -> (usize, usize) {
        (a.graph.vertex_count(), a.graph.edge_count())
    }

    #[test]
    fn bondage_counts() {
        let a = build_bondage_instance(&example_formula());
        // 3*4 + 3 + 3 vertices; 12 + 9 + 2 + 6 edges
        assert_eq!(counts(&a), (18, 29));
        let single = CnfFormula::parse_dimacs("p cnf 3 1\n1 2 3 0").unwrap();
        assert_eq!(counts(&build_bondage_instance(&single)), (13, 16));
        let s2 = a.s(2);
        assert_eq!(a.graph.neighbors(s2), [a.s(1), a.s(3)].into_iter().collect());
        assert_eq!(a.k, 1);
    }

    #[test]
    fn total_bondage_counts() {
        let a = build_total_bondage_instance(&example_formula());
        // 16 + 3 + 5 vertices; 16 + 9 + 5 + 6 edges
        assert_eq!(counts(&a), (24, 36));
        for i in 1..=4 {
            let p = a.v_pendant(i);
            assert_eq!(a.graph.neighbors(p), VertexSet::singleton(a.v(i)));
        }
        assert_eq!(a.graph.neighbors(a.s(5)), VertexSet::singleton(a.s(4)));
    }

    #[test]
    fn reinforcement_counts() {
        let a = build_reinforcement_instance(&example_formula());
        // 12 + 3 + 1 vertices; 12 + 9 + 3 edges
        assert_eq!(counts(&a), (16, 24));
        assert_eq!(a.graph.degree(a.s(1)), 3);
        for j in 1..=3 {
            assert_eq!(a.graph.degree(a.c(j)), 4);
        }
    }

    #[test]
    fn example_clause_wiring() {
        let a = build_bondage_instance(&example_formula());
        let want = |names: &[&str]| -> VertexSet {
            names
                .iter()
                .map(|n| a.vertex(n.parse().unwrap()))
                .collect()
        };
        assert_eq!(
            a.graph.neighbors(a.c(1)),
            want(&["u_1", "u_2", "ubar_3", "s_1", "s_3"])
        );
        assert_eq!(
            a.graph.neighbors(a.c(2)),
            want(&["ubar_1", "u_2", "u_4", "s_1", "s_3"])
        );
        assert_eq!(
            a.graph.neighbors(a.c(3)),
            want(&["ubar_2", "u_3", "u_4", "s_1", "s_3"])
        );
    }

    #[test]
    fn layout_is_stable() {
        let a = build_total_bondage_instance(&example_formula());
        assert_eq!(a.u(1), 0);
        assert_eq!(a.ubar(1), 1);
        assert_eq!(a.v(1), 2);
        assert_eq!(a.v_pendant(1), 3);
        assert_eq!(a.c(1), 16);
        assert_eq!(a.s(1), 19);
        assert_eq!(a, build_total_bondage_instance(&example_formula()));
    }

    #[test]
    fn role_strings_roundtrip() {
        for role in [
            PosLiteral(3),
            NegLiteral(1),
            Apex(2),
            ApexPendant(12),
            Clause(7),
            Spine(5),
        ] {
            assert_eq!(role.to_string().parse::<VertexRole>().unwrap(), role);
        }
        assert!("x_1".parse::<VertexRole>().is_err());
        assert!("u_0".parse::<VertexRole>().is_err());
        assert!("u".parse::<VertexRole>().is_err());
    }

    #[test]
    fn role_json_sidecar() {
        let a = build_reinforcement_instance(&example_formula());
        let json = a.roles_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["0"], "u_1");
        assert_eq!(v["15"], "s_1");
        let roles = ReductionArtifact::parse_roles_json(&json, 16).unwrap();
        assert_eq!(roles, a.roles());
        assert!(ReductionArtifact::parse_roles_json(&json, 17).is_err());
        assert!(ReductionArtifact::parse_roles_json(r#"{"0":"u_1","1":"u_1"}"#, 2).is_err());
    }

    #[test]
    fn target_names() {
        for t in ReductionTarget::ALL {
            assert_eq!(t.name().parse::<ReductionTarget>().unwrap(), t);
        }
        assert!("bogus".parse::<ReductionTarget>().is_err());
    }
}

//! Simple undirected graphs over dense vertex IDs, stored as adjacency
//! bitmasks.
//!
//! Graphs are immutable values: [`Graph::remove_edges`] and
//! [`Graph::add_edges`] return fresh graphs, so perturbation searches can
//! share one base graph across worker threads.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold. Vertex sets are `u128` masks.
pub const MAX_VERTICES: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("edge {0} is not present in the graph")]
    MissingEdge(Edge),
    #[error("edge {0} is already present in the graph")]
    DuplicateEdge(Edge),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A set of vertex IDs below [`MAX_VERTICES`], backed by a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    /// The set `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n >= MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < MAX_VERTICES {
            self.0 &= !(1u128 << v);
        }
    }

    pub fn with(self, v: usize) -> Self {
        let mut s = self;
        s.insert(v);
        s
    }

    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// One past the largest member; 0 for the empty set.
    pub fn upper_bound(self) -> usize {
        (128 - self.0.leading_zeros()) as usize
    }

    /// Members in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[derive(Clone)]
pub struct VertexIter(u128);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An unordered pair of distinct vertices, stored with the smaller ID first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Result<Self, GraphError> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Ok(Edge(u, v)),
            std::cmp::Ordering::Greater => Ok(Edge(v, u)),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(u)),
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl serde::Serialize for Edge {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.0, self.1].serialize(serializer)
    }
}

/// A finite simple undirected graph on vertices `0..vertex_count`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `vertex_count` vertices.
    pub fn empty(vertex_count: usize) -> Result<Self, GraphError> {
        if vertex_count > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(vertex_count));
        }
        Ok(Graph {
            adjacency: vec![VertexSet::empty(); vertex_count],
        })
    }

    /// Builds a graph from an edge list. Repeated edges collapse to one.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(vertex_count)?;
        for (u, v) in edges {
            let e = Edge::new(u, v)?;
            g.check_vertex(e.hi())?;
            g.link(e);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].contains(v)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.lo(), e.hi())
    }

    /// Open neighborhood `N(v)`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    /// Closed neighborhood `N[v] = {v} ∪ N(v)`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].with(v))
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        self.adjacency
            .iter()
            .enumerate()
            .filter(|(_, a)| a.is_empty())
            .map(|(v, _)| v)
            .collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adjacency.iter().any(|a| a.is_empty())
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, adj) in self.adjacency.iter().enumerate() {
            for v in adj.iter().filter(|&v| v > u) {
                out.push(Edge(u, v));
            }
        }
        out
    }

    /// All pairs of distinct non-adjacent vertices in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.adjacency[u].contains(v) {
                    out.push(Edge(u, v));
                }
            }
        }
        out
    }

    /// Returns `self` minus `edges`. Every edge must be present.
    pub fn remove_edges(&self, edges: &[Edge]) -> Result<Graph, GraphError> {
        for &e in edges {
            self.check_vertex(e.hi())?;
            if !self.contains_edge(e) {
                return Err(GraphError::MissingEdge(e));
            }
        }
        let mut g = self.clone();
        for &e in edges {
            g.unlink(e);
        }
        Ok(g)
    }

    /// Returns `self` plus `edges`. Every edge must be absent.
    pub fn add_edges(&self, edges: &[Edge]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &e in edges {
            self.check_vertex(e.hi())?;
            if g.contains_edge(e) {
                return Err(GraphError::DuplicateEdge(e));
            }
            g.link(e);
        }
        Ok(g)
    }

    /// Parses the edge-list text format: an optional `n <vertex_count>`
    /// header, then one `u v` pair per line. Lines starting with `#` and
    /// blank lines are skipped. Without a header the vertex count is one
    /// past the largest ID seen.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut declared: Option<usize> = None;
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let parse_err = |message: String| GraphError::Parse {
                line: line_no,
                message,
            };
            if tokens[0] == "n" {
                if declared.is_some() || !pairs.is_empty() {
                    return Err(parse_err("header must appear once, before any edge".into()));
                }
                if tokens.len() != 2 {
                    return Err(parse_err("expected `n <vertex_count>`".into()));
                }
                let n = parse_id(tokens[1]).map_err(parse_err)?;
                if n > MAX_VERTICES {
                    return Err(GraphError::TooManyVertices(n));
                }
                declared = Some(n);
                continue;
            }
            if tokens.len() != 2 {
                return Err(parse_err(format!(
                    "expected two vertex IDs, found {} tokens",
                    tokens.len()
                )));
            }
            let u = parse_id(tokens[0]).map_err(parse_err)?;
            let v = parse_id(tokens[1]).map_err(parse_err)?;
            if u == v {
                return Err(parse_err(format!("self-loop on vertex {u}")));
            }
            if let Some(n) = declared {
                let hi = u.max(v);
                if hi >= n {
                    return Err(parse_err(format!(
                        "vertex {hi} out of range for declared vertex count {n}"
                    )));
                }
            }
            pairs.push((u, v));
        }
        let n = declared.unwrap_or_else(|| pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
        Graph::from_edges(n, pairs)
    }

    /// Serializes to the edge-list format read by [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.vertex_count());
        for e in self.edges() {
            let _ = writeln!(out, "{} {}", e.lo(), e.hi());
        }
        out
    }

    /// Renders the graph as Graphviz DOT. Vertices in `highlight` are drawn
    /// filled.
    pub fn to_dot(&self, labels: Option<&BTreeMap<usize, String>>, highlight: Option<VertexSet>) -> String {
        let highlight = highlight.unwrap_or_default();
        let mut out = String::from("graph G {\n  node [shape=circle];\n");
        for v in 0..self.vertex_count() {
            let label = labels
                .and_then(|l| l.get(&v))
                .cloned()
                .unwrap_or_else(|| v.to_string());
            let _ = write!(out, "  {v} [label=\"{}\"", escape_dot(&label));
            if highlight.contains(v) {
                out.push_str(", style=filled, fillcolor=black, fontcolor=white");
            }
            out.push_str("];\n");
        }
        for e in self.edges() {
            let _ = writeln!(out, "  {} -- {};", e.lo(), e.hi());
        }
        out.push_str("}\n");
        out
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.vertex_count() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            });
        }
        Ok(())
    }

    fn link(&mut self, e: Edge) {
        self.adjacency[e.lo()].insert(e.hi());
        self.adjacency[e.hi()].insert(e.lo());
    }

    fn unlink(&mut self, e: Edge) {
        self.adjacency[e.lo()].remove(e.hi());
        self.adjacency[e.hi()].remove(e.lo());
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count())
            .field("edges", &self.edges())
            .finish()
    }
}

fn parse_id(token: &str) -> Result<usize, String> {
    token
        .parse::<usize>()
        .map_err(|_| format!("`{token}` is not a non-negative integer"))
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

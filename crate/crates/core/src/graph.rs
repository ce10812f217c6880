//! Simple undirected graphs on dense vertex ids and edge subsets of them.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub type Vertex = usize;

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[Vertex; 2]", try_from = "[Vertex; 2]")]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    /// Panics on a self-loop; use [`Edge::try_new`] for untrusted input.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        Self::try_new(a, b).expect("self-loop")
    }

    pub fn try_new(a: Vertex, b: Vertex) -> Result<Self, GraphError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { lo: a, hi: b }),
            std::cmp::Ordering::Greater => Ok(Edge { lo: b, hi: a }),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(a)),
        }
    }

    pub fn lo(&self) -> Vertex {
        self.lo
    }

    pub fn hi(&self) -> Vertex {
        self.hi
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.lo, self.hi)
    }

    pub fn touches(&self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    pub fn other(&self, v: Vertex) -> Vertex {
        if v == self.lo {
            self.hi
        } else {
            debug_assert_eq!(v, self.hi);
            self.lo
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

impl From<Edge> for [Vertex; 2] {
    fn from(e: Edge) -> Self {
        [e.lo, e.hi]
    }
}

impl TryFrom<[Vertex; 2]> for Edge {
    type Error = GraphError;

    fn try_from(value: [Vertex; 2]) -> Result<Self, Self::Error> {
        Edge::try_new(value[0], value[1])
    }
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Edges are kept sorted by `(lo, hi)`, which fixes every "first edge" choice
/// made downstream. Graphs are immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<Vertex>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let edges = pairs
            .into_iter()
            .map(|(a, b)| Edge::try_new(a, b))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_edges(n, edges)
    }

    pub fn from_edges(n: usize, mut edges: Vec<Edge>) -> Result<Self, GraphError> {
        if let Some(e) = edges.iter().find(|e| e.hi >= n) {
            return Err(GraphError::VertexOutOfRange { vertex: e.hi, n });
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0]));
        }
        let mut adjacency = vec![Vec::new(); n];
        for e in &edges {
            adjacency[e.lo].push(e.hi);
            adjacency[e.hi].push(e.lo);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adjacency,
            labels: None,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCount {
                expected: self.n,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        Edge::try_new(a, b).is_ok_and(|e| self.contains(&e))
    }

    /// Position of `e` in the sorted edge list.
    pub fn edge_index(&self, e: &Edge) -> Option<usize> {
        self.edges.binary_search(e).ok()
    }

    /// First vertex not reachable from vertex 0, if any.
    pub fn unreachable_vertex(&self) -> Option<Vertex> {
        if self.n == 0 {
            return None;
        }
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.iter().position(|s| !s)
    }

    pub fn is_connected(&self) -> bool {
        self.unreachable_vertex().is_none()
    }

    /// Wraps `edges` as an [`EdgeSet`] after checking each one is a host edge.
    pub fn edge_set<I>(&self, edges: I) -> Result<EdgeSet, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let set = EdgeSet::from_iter(edges);
        if let Some(e) = set.iter().find(|e| !self.contains(e)) {
            return Err(GraphError::NotInHost { edge: *e });
        }
        Ok(set)
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet {
            edges: self.edges.clone(),
        }
    }
}

/// A sorted, duplicate-free set of edges.
///
/// Carries no host reference; membership in a particular host is checked
/// where it matters ([`Graph::edge_set`], the verifier).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<Edge>", from = "Vec<Edge>")]
pub struct EdgeSet {
    edges: Vec<Edge>,
}

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Edge> {
        self.edges.iter()
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        self.iter().chain(other.iter()).copied().collect()
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.shared_edge(other).is_none()
    }

    /// Smallest edge present in both sets.
    pub fn shared_edge(&self, other: &EdgeSet) -> Option<Edge> {
        let (mut i, mut j) = (0, 0);
        while i < self.edges.len() && j < other.edges.len() {
            match self.edges[i].cmp(&other.edges[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return Some(self.edges[i]),
            }
        }
        None
    }

    pub fn is_subset_of(&self, other: &EdgeSet) -> bool {
        self.iter().all(|e| other.contains(e))
    }

    /// Sorted list of vertices touched by some edge.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.iter().flat_map(|e| [e.lo, e.hi]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Adjacency lists (ascending) of the spanning subgraph on `n` vertices.
    pub fn adjacency(&self, n: usize) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.lo].push(e.hi);
            adj[e.hi].push(e.lo);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Connected components of the spanning subgraph on `n` vertices, each
    /// sorted, listed by smallest member.
    pub fn components(&self, n: usize) -> Vec<Vec<Vertex>> {
        let adj = self.adjacency(n);
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

impl From<Vec<Edge>> for EdgeSet {
    fn from(edges: Vec<Edge>) -> Self {
        edges.into_iter().collect()
    }
}

impl From<EdgeSet> for Vec<Edge> {
    fn from(set: EdgeSet) -> Self {
        set.edges
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<T: IntoIterator<Item = Edge>>(iter: T) -> Self {
        let mut edges: Vec<Edge> = iter.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        EdgeSet { edges }
    }
}

impl Extend<Edge> for EdgeSet {
    fn extend<T: IntoIterator<Item = Edge>>(&mut self, iter: T) {
        self.edges.extend(iter);
        self.edges.sort_unstable();
        self.edges.dedup();
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a Edge;
    type IntoIter = std::slice::Iter<'a, Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.iter()
    }
}

impl IntoIterator for EdgeSet {
    type Item = Edge;
    type IntoIter = std::vec::IntoIter<Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.into_iter()
    }
}

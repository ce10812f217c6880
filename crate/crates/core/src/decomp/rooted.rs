use std::collections::VecDeque;

use crate::error::DecompError;
use crate::graph::{Edge, EdgeSet, Graph, Vertex};

use super::require_spanning_tree;

/// A spanning tree with a root, parent pointers and breadth-first order
/// (children visited in ascending vertex order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    tree: EdgeSet,
    root: Vertex,
    parent: Vec<Option<Vertex>>,
    depth: Vec<usize>,
    order: Vec<Vertex>,
}

impl RootedTree {
    pub fn new(host: &Graph, tree: &EdgeSet, root: Vertex) -> Result<Self, DecompError> {
        require_spanning_tree(host, tree)?;
        let n = host.n();
        if root >= n {
            return Err(DecompError::Product(
                crate::error::ProductError::IndexOutOfRange {
                    what: "root",
                    index: root,
                    limit: n,
                },
            ));
        }
        let adj = tree.adjacency(n);
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        Ok(RootedTree {
            tree: tree.clone(),
            root,
            parent,
            depth,
            order,
        })
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn tree(&self) -> &EdgeSet {
        &self.tree
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn depth(&self, v: Vertex) -> usize {
        self.depth[v]
    }

    /// All vertices in breadth-first order, root first.
    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    /// `(parent, child)` for every non-root vertex, in breadth-first order of the child.
    pub fn parent_child_pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.order[1..]
            .iter()
            .map(|&c| (self.parent[c].expect("non-root has a parent"), c))
    }

    pub fn parent_edge(&self, child: Vertex) -> Option<Edge> {
        self.parent[child].map(|p| Edge::new(p, child))
    }
}

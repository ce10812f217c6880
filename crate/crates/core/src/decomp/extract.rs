use std::collections::VecDeque;

use crate::error::DecompError;
use crate::graph::{Edge, EdgeSet, Graph};

/// Breadth-first spanning tree of the spanning subgraph `sub`, starting at
/// vertex 0 and scanning neighbours in ascending order.
pub fn extract_spanning_tree(host: &Graph, sub: &EdgeSet) -> Result<EdgeSet, DecompError> {
    if let Some(e) = sub.iter().find(|e| !host.contains(e)) {
        return Err(DecompError::NotInHost(*e));
    }
    let n = host.n();
    if n == 0 {
        return Ok(EdgeSet::new());
    }
    let adj = sub.adjacency(n);
    let mut seen = vec![false; n];
    let mut tree = Vec::with_capacity(n - 1);
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                tree.push(Edge::new(v, w));
                queue.push_back(w);
            }
        }
    }
    match seen.iter().position(|s| !s) {
        Some(v) => Err(DecompError::Separated(v)),
        None => Ok(tree.into_iter().collect()),
    }
}

//! Structural checks on trees and packings.
//!
//! Nothing here looks at how a tree was built: a tree passes when it has
//! `n - 1` host edges, no cycle, and reaches every vertex; a packing passes
//! when every member is a tree and no edge is used twice.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::graph::{Edge, EdgeSet, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    NotInHost { edge: Edge },
    EdgeCount { expected: usize, found: usize },
    Cycle { edges: Vec<Edge> },
    Separated { vertex: Vertex },
    SharedEdge { edge: Edge, trees: [usize; 2] },
    Value { expected: usize, found: usize },
    Message { text: String },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::NotInHost { edge } => write!(f, "edge {edge} is not in the host"),
            Witness::EdgeCount { expected, found } => {
                write!(f, "expected {expected} edges, found {found}")
            }
            Witness::Cycle { edges } => {
                let list: Vec<String> = edges.iter().map(Edge::to_string).collect();
                write!(f, "cycle through {}", list.join(", "))
            }
            Witness::Separated { vertex } => write!(f, "vertex {vertex} is not reached"),
            Witness::SharedEdge { edge, trees } => {
                write!(
                    f,
                    "edge {edge} is used by trees {} and {}",
                    trees[0], trees[1]
                )
            }
            Witness::Value { expected, found } => write!(f, "expected {expected}, found {found}"),
            Witness::Message { text } => f.write_str(text),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        Check {
            name: name.into(),
            passed: false,
            witness: Some(witness),
        }
    }

    fn from_result(name: impl Into<String>, result: Result<(), Witness>) -> Self {
        match result {
            Ok(()) => Check::pass(name),
            Err(w) => Check::fail(name, w),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        VerificationReport {
            subject: subject.into(),
            checks,
            passed,
        }
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        writeln!(f, "{verdict} {}", self.subject)?;
        for check in &self.checks {
            let mark = if check.passed { "ok  " } else { "FAIL" };
            match &check.witness {
                Some(w) => writeln!(f, "  {mark} {}: {w}", check.name)?,
                None => writeln!(f, "  {mark} {}", check.name)?,
            }
        }
        Ok(())
    }
}

pub fn verify_tree(host: &Graph, tree: &EdgeSet) -> VerificationReport {
    VerificationReport::new("spanning tree", tree_checks(host, tree, ""))
}

fn tree_checks(host: &Graph, tree: &EdgeSet, prefix: &str) -> Vec<Check> {
    let n = host.n();
    let in_host = match tree.iter().find(|e| !host.contains(e)) {
        Some(e) => Err(Witness::NotInHost { edge: *e }),
        None => Ok(()),
    };
    let expected = n.saturating_sub(1);
    let count = if tree.len() == expected {
        Ok(())
    } else {
        Err(Witness::EdgeCount {
            expected,
            found: tree.len(),
        })
    };
    // Edges outside the host may name vertices >= n; those are already
    // reported above, so structural checks only look at in-range edges.
    let in_range: EdgeSet = tree.iter().filter(|e| e.hi() < n).copied().collect();
    vec![
        Check::from_result(format!("{prefix}edges in host"), in_host),
        Check::from_result(format!("{prefix}edge count"), count),
        Check::from_result(format!("{prefix}acyclic"), find_cycle(n, &in_range)),
        Check::from_result(format!("{prefix}spanning"), find_separated(n, &in_range)),
    ]
}

fn find_cycle(n: usize, edges: &EdgeSet) -> Result<(), Witness> {
    let mut uf = UnionFind::<usize>::new(n);
    let mut adj: Vec<Vec<(Vertex, Edge)>> = vec![Vec::new(); n];
    for e in edges {
        if !uf.union(e.lo(), e.hi()) {
            let mut cycle = forest_path(&adj, e.lo(), e.hi());
            cycle.push(*e);
            cycle.sort_unstable();
            return Err(Witness::Cycle { edges: cycle });
        }
        adj[e.lo()].push((e.hi(), *e));
        adj[e.hi()].push((e.lo(), *e));
    }
    Ok(())
}

fn forest_path(adj: &[Vec<(Vertex, Edge)>], from: Vertex, to: Vertex) -> Vec<Edge> {
    let mut via: Vec<Option<Edge>> = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &(w, e) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                via[w] = Some(e);
                queue.push_back(w);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = to;
    while let Some(e) = via[cur] {
        path.push(e);
        cur = e.other(cur);
    }
    path
}

fn find_separated(n: usize, edges: &EdgeSet) -> Result<(), Witness> {
    if n == 0 {
        return Ok(());
    }
    let adj = edges.adjacency(n);
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    match seen.iter().position(|s| !s) {
        Some(vertex) => Err(Witness::Separated { vertex }),
        None => Ok(()),
    }
}

/// Every tree must be a spanning tree of `host` and no edge may appear in two trees.
pub fn verify_packing(host: &Graph, trees: &[EdgeSet]) -> VerificationReport {
    let mut checks = Vec::new();
    for (i, tree) in trees.iter().enumerate() {
        checks.extend(tree_checks(host, tree, &format!("tree {i}: ")));
    }
    let mut owner: HashMap<Edge, usize> = HashMap::new();
    let mut shared = Ok(());
    'outer: for (i, tree) in trees.iter().enumerate() {
        for e in tree {
            if let Some(&j) = owner.get(e) {
                shared = Err(Witness::SharedEdge {
                    edge: *e,
                    trees: [j, i],
                });
                break 'outer;
            }
            owner.insert(*e, i);
        }
    }
    checks.push(Check::from_result("pairwise edge-disjoint", shared));
    VerificationReport::new(format!("packing of {} trees", trees.len()), checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    fn set(pairs: &[(usize, usize)]) -> EdgeSet {
        pairs.iter().map(|&(a, b)| Edge::new(a, b)).collect()
    }

    fn c4() -> Graph {
        generate(FamilySpec::Cycle { n: 4 }).unwrap()
    }

    #[test]
    fn spanning_path_of_c4_passes() {
        let r = verify_tree(&c4(), &set(&[(0, 1), (1, 2), (2, 3)]));
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn whole_c4_fails_with_cycle_witness() {
        let r = verify_tree(&c4(), &c4().all_edges());
        assert!(!r.passed());
        let witnesses: Vec<_> = r.failures().filter_map(|c| c.witness.clone()).collect();
        assert!(witnesses.contains(&Witness::EdgeCount {
            expected: 3,
            found: 4
        }));
        assert!(witnesses
            .iter()
            .any(|w| matches!(w, Witness::Cycle { edges } if edges.len() == 4)));
    }

    #[test]
    fn disjoint_edges_fail_with_separated_vertex() {
        let p4 = generate(FamilySpec::Path { n: 4 }).unwrap();
        let r = verify_tree(&p4, &set(&[(0, 1), (2, 3)]));
        assert!(!r.passed());
        assert!(r
            .failures()
            .any(|c| c.witness == Some(Witness::Separated { vertex: 2 })));
    }

    #[test]
    fn foreign_edge_is_reported() {
        let r = verify_tree(&c4(), &set(&[(0, 1), (1, 2), (0, 2)]));
        assert!(r.failures().any(|c| c.witness
            == Some(Witness::NotInHost {
                edge: Edge::new(0, 2)
            })));
    }

    #[test]
    fn duplicate_tree_shares_edges() {
        let t = set(&[(0, 1), (1, 2), (2, 3)]);
        let r = verify_packing(&c4(), &[t.clone(), t]);
        assert!(!r.passed());
        assert!(r.failures().any(|c| c.witness
            == Some(Witness::SharedEdge {
                edge: Edge::new(0, 1),
                trees: [0, 1]
            })));
    }

    #[test]
    fn report_renders_text() {
        let r = verify_tree(&c4(), &set(&[(0, 1)]));
        let text = r.to_string();
        assert!(text.starts_with("FAIL spanning tree"));
        assert!(text.contains("edge count: expected 3 edges, found 1"));
    }
}

//! Exact spanning tree packing number.
//!
//! `max_packing` grows a union of `k` forests by shortest augmenting paths
//! (matroid partition). When `k` forests can no longer all be spanning, the
//! edges reachable in the final search split the vertices into blocks whose
//! crossing count proves `σ = k - 1`.

use std::collections::VecDeque;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::OracleError;
use crate::graph::{Edge, EdgeSet, Graph, Vertex};
use crate::packing::{PackingMethod, TreePacking};

/// Largest order accepted by [`tutte_bruteforce`].
pub const BRUTEFORCE_MAX_N: usize = 12;

/// A vertex partition `P`; any packing has at most
/// `⌊crossing / (|P| - 1)⌋` trees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TutteCertificate {
    pub partition: Vec<Vec<Vertex>>,
    pub crossing: usize,
    pub bound: usize,
}

impl TutteCertificate {
    /// Blocks are normalised (sorted, ordered by smallest vertex).
    pub fn from_partition(g: &Graph, mut partition: Vec<Vec<Vertex>>) -> Result<Self, OracleError> {
        let n = g.n();
        if partition.len() < 2 {
            return Err(OracleError::InvalidPartition(format!(
                "{} block(s), need at least 2",
                partition.len()
            )));
        }
        let mut block_of = vec![usize::MAX; n];
        for block in &mut partition {
            if block.is_empty() {
                return Err(OracleError::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
        }
        partition.sort_unstable_by_key(|b| b[0]);
        for (i, block) in partition.iter().enumerate() {
            for &v in block {
                if v >= n {
                    return Err(OracleError::InvalidPartition(format!(
                        "vertex {v} out of range"
                    )));
                }
                if block_of[v] != usize::MAX {
                    return Err(OracleError::InvalidPartition(format!(
                        "vertex {v} in two blocks"
                    )));
                }
                block_of[v] = i;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(OracleError::InvalidPartition(format!(
                "vertex {v} not covered"
            )));
        }
        let crossing = g
            .edges()
            .iter()
            .filter(|e| block_of[e.lo()] != block_of[e.hi()])
            .count();
        let bound = crossing / (partition.len() - 1);
        Ok(TutteCertificate {
            partition,
            crossing,
            bound,
        })
    }

    pub fn parts(&self) -> usize {
        self.partition.len()
    }
}

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub sigma: usize,
    pub packing: TreePacking,
    pub certificate: TutteCertificate,
}

/// `⌊m / (n - 1)⌋`, the counting bound on σ.
pub fn edge_bound(g: &Graph) -> Result<usize, OracleError> {
    if g.n() < 2 {
        return Err(OracleError::TooSmall(g.n()));
    }
    Ok(g.m() / (g.n() - 1))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Label {
    Unseen,
    Source,
    /// Discovered on the cycle closed by this edge.
    From(usize),
}

struct Forests<'g> {
    n: usize,
    edges: &'g [Edge],
    owner: Vec<Option<usize>>,
    // adj[f][v] = indices of forest-f edges at v
    adj: Vec<Vec<Vec<usize>>>,
    sizes: Vec<usize>,
}

impl<'g> Forests<'g> {
    fn new(g: &'g Graph) -> Self {
        Forests {
            n: g.n(),
            edges: g.edges(),
            owner: vec![None; g.m()],
            adj: Vec::new(),
            sizes: Vec::new(),
        }
    }

    fn add_forest(&mut self) {
        self.adj.push(vec![Vec::new(); self.n]);
        self.sizes.push(0);
    }

    fn k(&self) -> usize {
        self.adj.len()
    }

    fn all_spanning(&self) -> bool {
        self.sizes.iter().all(|&s| s == self.n - 1)
    }

    fn insert(&mut self, f: usize, e: usize) {
        let (a, b) = self.edges[e].endpoints();
        self.adj[f][a].push(e);
        self.adj[f][b].push(e);
        self.owner[e] = Some(f);
        self.sizes[f] += 1;
    }

    fn remove(&mut self, e: usize) {
        let Some(f) = self.owner[e].take() else {
            return;
        };
        let (a, b) = self.edges[e].endpoints();
        for v in [a, b] {
            let list = &mut self.adj[f][v];
            let pos = list
                .iter()
                .position(|&x| x == e)
                .expect("edge listed at endpoint");
            list.swap_remove(pos);
        }
        self.sizes[f] -= 1;
    }

    /// Edge indices on the forest-`f` path between the endpoints of `e`, or
    /// `None` if `e` can be added to `f` without a cycle.
    fn cycle(&self, f: usize, e: usize) -> Option<Vec<usize>> {
        let (a, b) = self.edges[e].endpoints();
        let mut via = vec![usize::MAX; self.n];
        let mut seen = vec![false; self.n];
        seen[a] = true;
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            if v == b {
                let mut path = Vec::new();
                let mut x = b;
                while x != a {
                    let edge = via[x];
                    path.push(edge);
                    x = self.edges[edge].other(x);
                }
                return Some(path);
            }
            for &edge in &self.adj[f][v] {
                let w = self.edges[edge].other(v);
                if !seen[w] {
                    seen[w] = true;
                    via[w] = edge;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// One breadth-first search from every unplaced edge at once. Either
    /// places one more edge or returns the set of reachable edges.
    fn augment(&mut self) -> Result<bool, Vec<usize>> {
        let m = self.edges.len();
        let mut label = vec![Label::Unseen; m];
        let mut queue = VecDeque::new();
        for (e, lab) in label.iter_mut().enumerate() {
            if self.owner[e].is_none() {
                *lab = Label::Source;
                queue.push_back(e);
            }
        }
        if queue.is_empty() {
            return Ok(false);
        }
        while let Some(x) = queue.pop_front() {
            for f in 0..self.k() {
                if self.owner[x] == Some(f) {
                    continue;
                }
                match self.cycle(f, x) {
                    None => {
                        self.apply(x, f, &label);
                        return Ok(true);
                    }
                    Some(path) => {
                        for y in path {
                            if label[y] == Label::Unseen {
                                label[y] = Label::From(x);
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
        }
        Err((0..m).filter(|&e| label[e] != Label::Unseen).collect())
    }

    fn apply(&mut self, last: usize, into: usize, label: &[Label]) {
        let mut cur = last;
        let mut target = into;
        loop {
            let vacated = self.owner[cur];
            self.remove(cur);
            self.insert(target, cur);
            match label[cur] {
                Label::From(prev) => {
                    target = vacated.expect("labelled edge was placed");
                    cur = prev;
                }
                _ => break,
            }
        }
    }

    fn check_acyclic(&self) -> Result<(), OracleError> {
        for f in 0..self.k() {
            let mut uf = UnionFind::<usize>::new(self.n);
            for (e, owner) in self.owner.iter().enumerate() {
                if *owner == Some(f) && !uf.union(self.edges[e].lo(), self.edges[e].hi()) {
                    return Err(OracleError::Internal(format!("forest {f} gained a cycle")));
                }
            }
        }
        Ok(())
    }

    fn trees(&self) -> Vec<EdgeSet> {
        let mut trees = vec![Vec::new(); self.k()];
        for (e, owner) in self.owner.iter().enumerate() {
            if let Some(f) = owner {
                trees[*f].push(self.edges[e]);
            }
        }
        trees.into_iter().map(EdgeSet::from_iter).collect()
    }
}

/// Maximum packing of edge-disjoint spanning trees together with a
/// partition certificate showing no larger packing exists.
pub fn max_packing(g: &Graph) -> Result<OracleResult, OracleError> {
    if g.n() < 2 {
        return Err(OracleError::TooSmall(g.n()));
    }
    if let Some(v) = g.unreachable_vertex() {
        return Err(OracleError::Disconnected(v));
    }
    let mut forests = Forests::new(g);
    let mut best: Vec<EdgeSet> = Vec::new();
    loop {
        forests.add_forest();
        let reachable = loop {
            match forests.augment() {
                Ok(true) => forests.check_acyclic()?,
                Ok(false) => break Vec::new(),
                Err(reachable) => break reachable,
            }
        };
        if forests.all_spanning() {
            best = forests.trees();
            continue;
        }
        let sigma = forests.k() - 1;
        let sub: EdgeSet = reachable.iter().map(|&e| g.edges()[e]).collect();
        let certificate = TutteCertificate::from_partition(g, sub.components(g.n()))?;
        if certificate.bound != sigma {
            return Err(OracleError::Internal(format!(
                "certificate bound {} differs from packing size {sigma}",
                certificate.bound
            )));
        }
        let packing = TreePacking::new(g.clone(), best, PackingMethod::Oracle)
            .map_err(|e| OracleError::Internal(e.to_string()))?;
        return Ok(OracleResult {
            sigma,
            packing,
            certificate,
        });
    }
}

/// The partition minimising `⌊crossing / (parts - 1)⌋`, by exhaustive
/// enumeration. Ties go to the first partition in restricted-growth order.
pub fn tutte_bruteforce(g: &Graph) -> Result<TutteCertificate, OracleError> {
    let n = g.n();
    if n < 2 {
        return Err(OracleError::TooSmall(n));
    }
    if n > BRUTEFORCE_MAX_N {
        return Err(OracleError::TooLarge {
            n,
            max: BRUTEFORCE_MAX_N,
        });
    }
    // restricted growth string: block[0] = 0, block[i] <= 1 + max(block[..i])
    let mut block = vec![0usize; n];
    let mut best: Option<(usize, Vec<usize>)> = None;
    loop {
        let parts = block.iter().max().map_or(0, |m| m + 1);
        if parts >= 2 {
            let crossing = g
                .edges()
                .iter()
                .filter(|e| block[e.lo()] != block[e.hi()])
                .count();
            let value = crossing / (parts - 1);
            if best.as_ref().is_none_or(|(b, _)| value < *b) {
                best = Some((value, block.clone()));
            }
        }
        if !next_rgs(&mut block) {
            break;
        }
    }
    let (_, block) = best.expect("n >= 2 has a partition with two blocks");
    let parts = block.iter().max().unwrap() + 1;
    let mut partition = vec![Vec::new(); parts];
    for (v, &b) in block.iter().enumerate() {
        partition[b].push(v);
    }
    TutteCertificate::from_partition(g, partition)
}

fn next_rgs(a: &mut [usize]) -> bool {
    let n = a.len();
    for i in (1..n).rev() {
        let max_prefix = a[..i].iter().copied().max().unwrap_or(0);
        if a[i] <= max_prefix {
            a[i] += 1;
            a[i + 1..].fill(0);
            return true;
        }
    }
    false
}

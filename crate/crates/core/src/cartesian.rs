//! `k + l - 1` edge-disjoint spanning trees of `G □ H` from `k` trees of G
//! and `l` trees of H.
//!
//! The last tree `T_k` of G is rooted at vertex 0 and the last tree `T'_l` of
//! H is leaf-split into a kept subtree `T_a` and a removed forest `F_b`.
//! Walking `T_k` breadth-first, the first `floor((n1-1)/2)` non-root fibers
//! keep their `T_a` copy and the rest keep their `F_b` copy. Each child fiber
//! is hooked to its parent fiber with cross edges at:
//!
//! * `V(T_a)` when it keeps `F_b` (one per forest component), or
//! * `V(H) \ V(T_a)` plus the smallest vertex of `T_a` when it keeps `T_a`.
//!
//! That yields the tree `T̂`. The copies it left behind pair up with the
//! parallel subgraphs of `T_1..T_{k-1}` (one unused `T_a` and one unused `F_b`
//! rebuild a full copy of `T'_l` between the cross-section copies), and the
//! unused cross edges under `T_k` link the fibers of `T'_1..T'_{l-1}`.

use crate::decomp::{fiber_copies, leaf_split, parallel_subgraph_cartesian, LeafSplit, RootedTree};
use crate::error::PackError;
use crate::graph::{Edge, EdgeSet, Graph, Vertex};
use crate::packing::{PackingMethod, TreePacking};
use crate::product::{Factor, ProductGraph};
use crate::verify::verify_tree;

/// What a fiber `H(u)` contributes to `T̂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberRole {
    /// Root fiber: the whole of `T'_l`.
    Root,
    /// Keeps the `T_a` copy; its `F_b` copy stays unused.
    KeepsSubtree,
    /// Keeps the `F_b` copy; its `T_a` copy stays unused.
    KeepsForest,
}

/// Cross edges between a child fiber and its parent fiber, as H-indices `v`
/// of the edges `(parent, v)(child, v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundlePlan {
    pub parent: Vertex,
    pub child: Vertex,
    pub role: FiberRole,
    /// `E1` or `E2`, sorted.
    pub used: Vec<Vertex>,
    /// The complement, sorted.
    pub leftover: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossEdgePlan {
    /// One entry per edge of `T_k`, in breadth-first order of the child.
    pub bundles: Vec<BundlePlan>,
}

pub fn cartesian_bound(k: usize, l: usize) -> usize {
    k + l - 1
}

/// Roles indexed by G-vertex: breadth-first, the first `floor((n1-1)/2)`
/// non-root fibers keep `T_a`, the remainder keep `F_b`.
pub fn fiber_roles(t_k: &RootedTree) -> Vec<FiberRole> {
    let quota = (t_k.n() - 1) / 2;
    let mut roles = vec![FiberRole::Root; t_k.n()];
    for (i, &u) in t_k.order()[1..].iter().enumerate() {
        roles[u] = if i < quota {
            FiberRole::KeepsSubtree
        } else {
            FiberRole::KeepsForest
        };
    }
    roles
}

pub fn plan_cross_edges(
    t_k: &RootedTree,
    split: &LeafSplit,
    roles: &[FiberRole],
) -> Result<CrossEdgePlan, PackError> {
    if roles.len() != t_k.n() {
        return Err(PackError::Infeasible(format!(
            "{} fiber roles for {} fibers",
            roles.len(),
            t_k.n()
        )));
    }
    let n2 = split.n();
    let mut bundles = Vec::with_capacity(t_k.n().saturating_sub(1));
    for (parent, child) in t_k.parent_child_pairs() {
        let role = roles[child];
        let used: Vec<Vertex> = match role {
            FiberRole::KeepsForest => split.kept_vertices().to_vec(),
            FiberRole::KeepsSubtree => {
                let mut used = split.removed_vertices();
                used.push(split.min_kept());
                used.sort_unstable();
                used
            }
            FiberRole::Root => {
                return Err(PackError::Infeasible(format!(
                    "non-root fiber {child} is marked as root"
                )))
            }
        };
        let leftover = (0..n2).filter(|v| used.binary_search(v).is_err()).collect();
        bundles.push(BundlePlan {
            parent,
            child,
            role,
            used,
            leftover,
        });
    }
    Ok(CrossEdgePlan { bundles })
}

pub fn build_hat_tree(
    p: &ProductGraph,
    t_k: &RootedTree,
    t_l: &EdgeSet,
    split: &LeafSplit,
    roles: &[FiberRole],
    plan: &CrossEdgePlan,
) -> Result<EdgeSet, PackError> {
    let mut edges: Vec<_> = t_l.iter().map(|e| p.fiber_edge(t_k.root(), *e)).collect();
    for bundle in &plan.bundles {
        let kept = match roles[bundle.child] {
            FiberRole::KeepsSubtree => split.kept_edges(),
            FiberRole::KeepsForest => split.forest_edges(),
            FiberRole::Root => unreachable!("plan_cross_edges rejects root children"),
        };
        edges.extend(kept.iter().map(|e| p.fiber_edge(bundle.child, *e)));
        let g_edge = Edge::new(bundle.parent, bundle.child);
        edges.extend(bundle.used.iter().map(|&v| p.cross_edge(g_edge, v)));
    }
    let tree: EdgeSet = edges.into_iter().collect();
    let report = verify_tree(p.graph(), &tree);
    if !report.passed() {
        return Err(PackError::Construction(Box::new(report)));
    }
    Ok(tree)
}

/// Packs `G □ H` with `k + l - 1` trees, where `k = pack_g.len()` and
/// `l = pack_h.len()`. Output order: the `k - 1` trees built on `T_1..T_{k-1}`,
/// then the `l - 1` built on `T'_1..T'_{l-1}`, then `T̂`.
pub fn pack_cartesian(
    g: &Graph,
    h: &Graph,
    pack_g: &TreePacking,
    pack_h: &TreePacking,
) -> Result<TreePacking, PackError> {
    check_factor_packing(Factor::G, g, pack_g)?;
    check_factor_packing(Factor::H, h, pack_h)?;
    let p = ProductGraph::cartesian(g, h)?;
    let (k, l) = (pack_g.len(), pack_h.len());
    let t_k = RootedTree::new(g, &pack_g.trees()[k - 1], 0)?;
    let t_l = &pack_h.trees()[l - 1];
    let split = leaf_split(h, t_l)?;
    let roles = fiber_roles(&t_k);
    let plan = plan_cross_edges(&t_k, &split, &roles)?;
    let hat = build_hat_tree(&p, &t_k, t_l, &split, &roles, &plan)?;

    // Fibers whose T_a copy is unused kept F_b, and vice versa.
    let spare_subtrees: Vec<Vertex> = t_k.order()[1..]
        .iter()
        .copied()
        .filter(|&u| roles[u] == FiberRole::KeepsForest)
        .collect();
    let spare_forests: Vec<Vertex> = t_k.order()[1..]
        .iter()
        .copied()
        .filter(|&u| roles[u] == FiberRole::KeepsSubtree)
        .collect();
    if k - 1 > spare_subtrees.len().min(spare_forests.len()) {
        return Err(PackError::Infeasible(format!(
            "{} G-trees need spare subtree/forest copies, only {} available",
            k - 1,
            spare_subtrees.len().min(spare_forests.len())
        )));
    }

    let mut trees = Vec::with_capacity(k + l - 1);
    for (i, tree) in pack_g.trees()[..k - 1].iter().enumerate() {
        let mut edges = parallel_subgraph_cartesian(&p, tree, Factor::G)?.edges;
        let (a_fiber, b_fiber) = (spare_subtrees[i], spare_forests[i]);
        edges.extend(split.kept_edges().iter().map(|e| p.fiber_edge(a_fiber, *e)));
        edges.extend(
            split
                .forest_edges()
                .iter()
                .map(|e| p.fiber_edge(b_fiber, *e)),
        );
        trees.push(edges);
    }
    for (j, tree) in pack_h.trees()[..l - 1].iter().enumerate() {
        let mut edges = fiber_copies(&p, tree)?.edges;
        for bundle in &plan.bundles {
            let &v = bundle.leftover.get(j).ok_or_else(|| {
                PackError::Infeasible(format!(
                    "bundle {}-{} has {} leftover cross edges, tree {} needs one more",
                    bundle.parent,
                    bundle.child,
                    bundle.leftover.len(),
                    j
                ))
            })?;
            edges.extend([p.cross_edge(Edge::new(bundle.parent, bundle.child), v)]);
        }
        trees.push(edges);
    }
    trees.push(hat);
    TreePacking::new(p.into_graph(), trees, PackingMethod::ConstructedCartesian)
}

pub(crate) fn check_factor_packing(
    factor: Factor,
    graph: &Graph,
    packing: &TreePacking,
) -> Result<(), PackError> {
    if graph.n() < 2 {
        return Err(PackError::FactorTooSmall {
            factor,
            n: graph.n(),
        });
    }
    if packing.is_empty() {
        return Err(PackError::EmptyPacking { factor });
    }
    if packing.host() != graph {
        return Err(PackError::InvalidPacking {
            factor,
            tree: 0,
            reason: "packing belongs to a different graph".to_string(),
        });
    }
    Ok(())
}

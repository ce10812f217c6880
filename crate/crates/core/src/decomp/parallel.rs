use crate::error::{DecompError, ProductError};
use crate::graph::{EdgeSet, Vertex};
use crate::product::{Factor, ProductGraph, ProductKind};

use super::matching::{bundle_matching, MatchingDecomposition};
use super::require_spanning_tree;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Realization {
    /// One copy of a G-tree in every cross-section `G(v)`.
    CrossSections,
    /// One copy of an H-tree in every fiber `H(u)`.
    Fibers,
    /// Every edge of a G-tree replaced by matching `j` of its bundle.
    Matching(usize),
}

/// The disjoint union of copies of one factor spanning tree laid across the
/// product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelSubgraph {
    pub factor: Factor,
    pub realization: Realization,
    pub source_tree: EdgeSet,
    pub edges: EdgeSet,
}

impl ParallelSubgraph {
    pub fn components(&self, product_order: usize) -> Vec<Vec<Vertex>> {
        self.edges.components(product_order)
    }
}

/// `F_i` (copies of a G-tree in each cross-section) or `F'_j` (copies of an
/// H-tree in each fiber) of a Cartesian product.
pub fn parallel_subgraph_cartesian(
    p: &ProductGraph,
    tree: &EdgeSet,
    which: Factor,
) -> Result<ParallelSubgraph, DecompError> {
    if p.kind() != ProductKind::Cartesian {
        return Err(ProductError::Unsupported("expected a Cartesian product").into());
    }
    match which {
        Factor::G => cross_section_copies(p, tree),
        Factor::H => fiber_copies(p, tree),
    }
}

/// `F'_j`: copies of a spanning tree of H inside every fiber. Valid in both
/// product kinds.
pub fn fiber_copies(p: &ProductGraph, tree_h: &EdgeSet) -> Result<ParallelSubgraph, DecompError> {
    require_spanning_tree(p.factor_h(), tree_h)?;
    let edges = (0..p.n1())
        .flat_map(|u| tree_h.iter().map(move |e| p.fiber_edge(u, *e)))
        .collect();
    Ok(ParallelSubgraph {
        factor: Factor::H,
        realization: Realization::Fibers,
        source_tree: tree_h.clone(),
        edges,
    })
}

fn cross_section_copies(
    p: &ProductGraph,
    tree_g: &EdgeSet,
) -> Result<ParallelSubgraph, DecompError> {
    require_spanning_tree(p.factor_g(), tree_g)?;
    let edges = (0..p.n2())
        .flat_map(|v| tree_g.iter().map(move |e| p.cross_edge(*e, v)))
        .collect();
    Ok(ParallelSubgraph {
        factor: Factor::G,
        realization: Realization::CrossSections,
        source_tree: tree_g.clone(),
        edges,
    })
}

/// `F_{i,j}` of a lexicographic product: matching `j` of every bundle along
/// the G-tree. With the identity matching the components are exactly the
/// cross-section copies of the tree.
pub fn parallel_subgraph_lex(
    p: &ProductGraph,
    tree_g: &EdgeSet,
    dec: &MatchingDecomposition,
    j: usize,
) -> Result<ParallelSubgraph, DecompError> {
    if p.kind() != ProductKind::Lexicographic {
        return Err(ProductError::Unsupported("expected a lexicographic product").into());
    }
    require_spanning_tree(p.factor_g(), tree_g)?;
    let mut edges = Vec::with_capacity(tree_g.len() * p.n2());
    for e in tree_g {
        edges.extend(bundle_matching(p, *e, dec, j)?);
    }
    Ok(ParallelSubgraph {
        factor: Factor::G,
        realization: Realization::Matching(j),
        source_tree: tree_g.clone(),
        edges: edges.into_iter().collect(),
    })
}

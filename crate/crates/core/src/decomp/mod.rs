//! Building blocks shared by both product constructions: rooted trees,
//! leaf splits, bundle matchings, parallel subgraphs and spanning-tree
//! extraction.

mod extract;
mod leaf_split;
mod matching;
mod parallel;
mod rooted;

pub use extract::extract_spanning_tree;
pub use leaf_split::{leaf_split, LeafSplit};
pub use matching::{bundle_matching, perfect_cycle, MatchingDecomposition};
pub use parallel::{
    fiber_copies, parallel_subgraph_cartesian, parallel_subgraph_lex, ParallelSubgraph, Realization,
};
pub use rooted::RootedTree;

use crate::error::DecompError;
use crate::graph::{EdgeSet, Graph};
use crate::verify::verify_tree;

fn require_spanning_tree(host: &Graph, tree: &EdgeSet) -> Result<(), DecompError> {
    let report = verify_tree(host, tree);
    if report.passed() {
        return Ok(());
    }
    let reasons: Vec<String> = report
        .failures()
        .map(|c| match &c.witness {
            Some(w) => format!("{}: {w}", c.name),
            None => c.name.clone(),
        })
        .collect();
    Err(DecompError::NotSpanningTree(reasons.join("; ")))
}

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::PackError;
use crate::graph::{EdgeSet, Graph};
use crate::product::Factor;
use crate::verify::{verify_packing, verify_tree, VerificationReport};

/// Where a packing came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PackingMethod {
    ConstructedCartesian,
    ConstructedLex,
    Oracle,
    User,
}

impl fmt::Display for PackingMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PackingMethod::ConstructedCartesian => "constructed-cartesian",
            PackingMethod::ConstructedLex => "constructed-lex",
            PackingMethod::Oracle => "oracle",
            PackingMethod::User => "user",
        })
    }
}

/// Pairwise edge-disjoint spanning trees of `host`. Only constructible
/// through the verifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreePacking {
    host: Graph,
    trees: Vec<EdgeSet>,
    method: PackingMethod,
}

impl TreePacking {
    pub fn new(host: Graph, trees: Vec<EdgeSet>, method: PackingMethod) -> Result<Self, PackError> {
        let report = verify_packing(&host, &trees);
        if !report.passed() {
            return Err(PackError::Construction(Box::new(report)));
        }
        Ok(TreePacking {
            host,
            trees,
            method,
        })
    }

    /// Like [`TreePacking::new`] for a packing of one product factor, but the
    /// error names the first offending tree.
    pub fn for_factor(
        factor: Factor,
        host: Graph,
        trees: Vec<EdgeSet>,
        method: PackingMethod,
    ) -> Result<Self, PackError> {
        for (i, tree) in trees.iter().enumerate() {
            let report = verify_tree(&host, tree);
            if let Some(check) = report.failures().next() {
                let reason = match &check.witness {
                    Some(w) => format!("{}: {w}", check.name),
                    None => check.name.clone(),
                };
                return Err(PackError::InvalidPacking {
                    factor,
                    tree: i,
                    reason,
                });
            }
            if let Some((j, e)) = trees[..i]
                .iter()
                .enumerate()
                .find_map(|(j, other)| other.shared_edge(tree).map(|e| (j, e)))
            {
                return Err(PackError::InvalidPacking {
                    factor,
                    tree: i,
                    reason: format!("shares edge {e} with tree {j}"),
                });
            }
        }
        Self::new(host, trees, method)
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn trees(&self) -> &[EdgeSet] {
        &self.trees
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn method(&self) -> PackingMethod {
        self.method
    }

    pub fn verify(&self) -> VerificationReport {
        verify_packing(&self.host, &self.trees)
    }

    pub fn into_trees(self) -> Vec<EdgeSet> {
        self.trees
    }
}

use serde::Serialize;

use crate::cartesian::{cartesian_bound, pack_cartesian};
use crate::error::PackError;
use crate::graph::Graph;
use crate::lex::{lex_bound, pack_lex};
use crate::oracle::max_packing;
use crate::packing::TreePacking;
use crate::product::{Factor, ProductKind};

/// Number of trees the construction yields from `k` trees of G and `l` of H.
pub fn construction_bound(kind: ProductKind, k: usize, l: usize, n1: usize, n2: usize) -> usize {
    match kind {
        ProductKind::Cartesian => cartesian_bound(k, l),
        ProductKind::Lexicographic => lex_bound(k, l, n1, n2).1,
    }
}

/// Packs the product from the given factor packings.
pub fn construct(
    kind: ProductKind,
    g: &Graph,
    h: &Graph,
    pack_g: &TreePacking,
    pack_h: &TreePacking,
) -> Result<TreePacking, PackError> {
    match kind {
        ProductKind::Cartesian => pack_cartesian(g, h, pack_g, pack_h),
        ProductKind::Lexicographic => pack_lex(g, h, pack_g, pack_h),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductPacking {
    pub kind: ProductKind,
    pub sigma_g: usize,
    pub sigma_h: usize,
    pub bound: usize,
    #[serde(skip)]
    pub packing: TreePacking,
}

/// Maximum packings of both factors, then the product construction.
pub fn pack_product(kind: ProductKind, g: &Graph, h: &Graph) -> Result<ProductPacking, PackError> {
    for (factor, graph) in [(Factor::G, g), (Factor::H, h)] {
        if graph.n() < 2 {
            return Err(PackError::FactorTooSmall {
                factor,
                n: graph.n(),
            });
        }
    }
    let pack_g = max_packing(g)?.packing;
    let pack_h = max_packing(h)?.packing;
    let packing = construct(kind, g, h, &pack_g, &pack_h)?;
    Ok(ProductPacking {
        kind,
        sigma_g: pack_g.len(),
        sigma_h: pack_h.len(),
        bound: construction_bound(kind, pack_g.len(), pack_h.len(), g.n(), h.n()),
        packing,
    })
}

//! Edge-disjoint spanning trees of the lexicographic product `G ∘ H`.
//!
//! Ingredients, for `k` trees of G and `l` trees of H:
//!
//! * `F_{i,j}` (`kn2` of them): matching `j` of every bundle along `T_i`. Each
//!   has `n2` components, and every component meets every fiber once.
//! * fiber trees `T'_t(u)` (`l·n1` of them): the copy of `T'_t` in `H(u)`.
//!   Any fiber tree joined with any `F_{i,j}` is a spanning tree.
//! * `F_{k,n2}` uses the identity matching, so its components are the
//!   cross-section copies `T_k(v)`; any of them joined with a full `F'_t`
//!   (all fiber copies of `T'_t`) is a spanning tree.
//! * two consecutive matchings of one bundle form a perfect cycle; any
//!   `F_{i,j}` plus any perfect cycle is connected and spanning.
//!
//! Which ingredients are combined depends on the sign of `l·n1 - k·n2`.

use serde::Serialize;

use crate::cartesian::check_factor_packing;
use crate::decomp::{
    extract_spanning_tree, fiber_copies, parallel_subgraph_lex, perfect_cycle,
    MatchingDecomposition,
};
use crate::error::PackError;
use crate::graph::{EdgeSet, Graph};
use crate::packing::{PackingMethod, TreePacking};
use crate::product::{Factor, ProductGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LexCase {
    /// `l·n1 = k·n2`
    Balanced,
    /// `l·n1 > k·n2`
    HRich,
    /// `l·n1 < k·n2`
    GRich,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LexPlan {
    pub case: LexCase,
    /// Fiber-tree budget (`HRich`) or number of perfect-cycle pairs (`GRich`).
    pub x: usize,
    pub predicted: usize,
}

pub fn lex_bound(k: usize, l: usize, n1: usize, n2: usize) -> (LexCase, usize) {
    let plan = plan_lex(k, l, n1, n2);
    (plan.case, plan.predicted)
}

pub fn plan_lex(k: usize, l: usize, n1: usize, n2: usize) -> LexPlan {
    assert!(
        k >= 1 && l >= 1 && n1 >= 1 && n2 >= 1,
        "lex plan needs positive inputs"
    );
    let kn2 = k * n2;
    let ln1 = l * n1;
    match ln1.cmp(&kn2) {
        std::cmp::Ordering::Equal => LexPlan {
            case: LexCase::Balanced,
            x: 0,
            predicted: kn2,
        },
        std::cmp::Ordering::Greater => {
            let x = (kn2 - 1).div_ceil(n1);
            LexPlan {
                case: LexCase::HRich,
                x,
                predicted: kn2 - x + l - 1,
            }
        }
        std::cmp::Ordering::Less => {
            let x = (kn2 - 1).div_ceil(n1 + 1);
            LexPlan {
                case: LexCase::GRich,
                x,
                predicted: kn2 - 2 * x + l - 1,
            }
        }
    }
}

/// Packs `G ∘ H` with exactly `lex_bound(k, l, n1, n2)` trees.
pub fn pack_lex(
    g: &Graph,
    h: &Graph,
    pack_g: &TreePacking,
    pack_h: &TreePacking,
) -> Result<TreePacking, PackError> {
    check_factor_packing(Factor::G, g, pack_g)?;
    check_factor_packing(Factor::H, h, pack_h)?;
    let p = ProductGraph::lexicographic(g, h)?;
    let (k, l, n1, n2) = (pack_g.len(), pack_h.len(), g.n(), h.n());
    let plan = plan_lex(k, l, n1, n2);
    let dec = MatchingDecomposition::new(n2);
    let reserved = (k - 1, dec.identity_index());

    let g_trees = pack_g.trees();
    let h_trees = pack_h.trees();
    let parallel = |i: usize, j: usize| -> Result<EdgeSet, PackError> {
        Ok(parallel_subgraph_lex(&p, &g_trees[i], &dec, j)?.edges)
    };
    let fiber_tree = |t: usize, u: usize| -> EdgeSet {
        h_trees[t].iter().map(|e| p.fiber_edge(u, *e)).collect()
    };
    let section_tree =
        |v: usize| -> EdgeSet { g_trees[k - 1].iter().map(|e| p.cross_edge(*e, v)).collect() };
    let all_subgraphs = (0..k).flat_map(|i| (1..=n2).map(move |j| (i, j)));

    let mut trees: Vec<EdgeSet> = Vec::with_capacity(plan.predicted);
    match plan.case {
        LexCase::Balanced => {
            let fibers = (0..l).flat_map(|t| (0..n1).map(move |u| (t, u)));
            for ((i, j), (t, u)) in all_subgraphs.zip(fibers) {
                trees.push(parallel(i, j)?.union(&fiber_tree(t, u)));
            }
        }
        LexCase::HRich => {
            let fibers: Vec<(usize, usize)> = (0..plan.x)
                .flat_map(|t| (0..n1).map(move |u| (t, u)))
                .collect();
            let subgraphs: Vec<(usize, usize)> = all_subgraphs.filter(|&s| s != reserved).collect();
            if fibers.len() < subgraphs.len() {
                return Err(PackError::Infeasible(format!(
                    "{} parallel subgraphs but only {} fiber trees",
                    subgraphs.len(),
                    fibers.len()
                )));
            }
            for (&(i, j), &(t, u)) in subgraphs.iter().zip(&fibers) {
                trees.push(parallel(i, j)?.union(&fiber_tree(t, u)));
            }
            if l - plan.x > n2 {
                return Err(PackError::Infeasible(format!(
                    "{} fiber-parallel subgraphs but only {} cross-section trees",
                    l - plan.x,
                    n2
                )));
            }
            for (v, t) in (plan.x..l).enumerate() {
                trees.push(fiber_copies(&p, &h_trees[t])?.edges.union(&section_tree(v)));
            }
        }
        LexCase::GRich => {
            if l > n2 {
                return Err(PackError::Infeasible(format!(
                    "{l} fiber-parallel subgraphs but only {n2} cross-section trees"
                )));
            }
            for (t, tree) in h_trees.iter().enumerate().take(l) {
                trees.push(fiber_copies(&p, tree)?.edges.union(&section_tree(t)));
            }
            // Matching pairs (i, r) = {M_{2r-1}, M_{2r}} along T_i, avoiding the
            // reserved identity realisation of T_k.
            let pairs: Vec<(usize, usize)> = (0..k)
                .flat_map(|i| (1..=dec.perfect_cycle_count()).map(move |r| (i, r)))
                .filter(|&(i, r)| {
                    let (a, b) = dec.cycle_pair(r);
                    (i, a) != reserved && (i, b) != reserved
                })
                .take(plan.x)
                .collect();
            if pairs.len() < plan.x {
                return Err(PackError::Infeasible(format!(
                    "need {} perfect-cycle pairs, only {} available",
                    plan.x,
                    pairs.len()
                )));
            }
            let mut consumed = vec![reserved];
            let mut cycles = Vec::new();
            for &(i, r) in &pairs {
                let (a, b) = dec.cycle_pair(r);
                consumed.extend([(i, a), (i, b)]);
                for e in &g_trees[i] {
                    cycles.push(perfect_cycle(&p, *e, &dec, r)?);
                }
            }
            let rest: Vec<(usize, usize)> =
                all_subgraphs.filter(|s| !consumed.contains(s)).collect();
            if cycles.len() < rest.len() {
                return Err(PackError::Infeasible(format!(
                    "{} parallel subgraphs but only {} perfect cycles",
                    rest.len(),
                    cycles.len()
                )));
            }
            for (&(i, j), cycle) in rest.iter().zip(&cycles) {
                let spanning = parallel(i, j)?.union(cycle);
                trees.push(extract_spanning_tree(p.graph(), &spanning)?);
            }
        }
    }
    debug_assert_eq!(trees.len(), plan.predicted);
    TreePacking::new(p.into_graph(), trees, PackingMethod::ConstructedLex)
}

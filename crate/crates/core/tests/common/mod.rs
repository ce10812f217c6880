#![allow(dead_code)]

use proptest::prelude::*;
use proptest::sample::Index;
use treepack::{generate, Edge, EdgeSet, Graph};

pub fn fam(s: &str) -> Graph {
    generate(s.parse().unwrap()).unwrap()
}

pub fn edge_set(pairs: &[(usize, usize)]) -> EdgeSet {
    pairs.iter().map(|&(a, b)| Edge::new(a, b)).collect()
}

/// Edges of a uniformly shaped random labelled tree on `n` vertices.
pub fn random_tree(n: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    (
        prop::collection::vec(any::<Index>(), n.saturating_sub(1)),
        Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
    )
        .prop_map(move |(parents, perm)| {
            (1..n)
                .map(|i| (perm[i], perm[parents[i - 1].index(i)]))
                .collect()
        })
}

/// Connected simple graph: a random spanning tree plus each other pair
/// with probability `density`.
pub fn connected_graph(min_n: usize, max_n: usize, density: f64) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(move |n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (
            random_tree(n),
            prop::collection::vec(prop::bool::weighted(density), pairs),
        )
            .prop_map(move |(tree, mask)| {
                let mut edges: Vec<(usize, usize)> = tree
                    .into_iter()
                    .map(|(a, b)| (a.min(b), a.max(b)))
                    .collect();
                let mut k = 0;
                for a in 0..n {
                    for b in a + 1..n {
                        if mask[k] {
                            edges.push((a, b));
                        }
                        k += 1;
                    }
                }
                edges.sort_unstable();
                edges.dedup();
                Graph::new(n, edges).unwrap()
            })
    })
}

/// A tree on `n` vertices as a graph in its own right.
pub fn tree_graph(n: usize) -> impl Strategy<Value = Graph> {
    random_tree(n).prop_map(move |edges| Graph::new(n, edges).unwrap())
}

mod common;

use common::fam;
use proptest::prelude::*;
use treepack::{max_packing, pack_cartesian, verify_packing, verify_tree, Edge, EdgeSet, Witness};

fn k6_packing() -> (treepack::Graph, Vec<EdgeSet>) {
    let g = fam("K6");
    let trees = max_packing(&g).unwrap().packing.into_trees();
    (g, trees)
}

proptest! {
    #[test]
    fn dropping_an_edge_fails(t in 0usize..3, pick in any::<prop::sample::Index>()) {
        let (g, mut trees) = k6_packing();
        let e = trees[t].as_slice()[pick.index(trees[t].len())];
        trees[t] = trees[t].iter().copied().filter(|x| *x != e).collect();
        let report = verify_packing(&g, &trees);
        prop_assert!(!report.passed());
        let short = report
            .failures()
            .any(|c| matches!(c.witness, Some(Witness::EdgeCount { expected: 5, found: 4 })));
        prop_assert!(short);
    }

    #[test]
    fn duplicating_an_edge_fails(a in 0usize..3, b in 0usize..3, pick in any::<prop::sample::Index>()) {
        prop_assume!(a != b);
        let (g, mut trees) = k6_packing();
        let e = trees[a].as_slice()[pick.index(trees[a].len())];
        trees[b].extend([e]);
        let report = verify_packing(&g, &trees);
        prop_assert!(!report.passed());
        let shared = report.failures().any(|c| matches!(c.witness, Some(Witness::SharedEdge { edge, .. }) if edge == e));
        prop_assert!(shared);
    }

    #[test]
    fn swapping_an_edge_fails(pick in any::<prop::sample::Index>(), other in any::<prop::sample::Index>()) {
        let (g, mut trees) = k6_packing();
        let e = trees[0].as_slice()[pick.index(trees[0].len())];
        let f = trees[1].as_slice()[other.index(trees[1].len())];
        trees[0] = trees[0].iter().copied().filter(|x| *x != e).chain([f]).collect();
        let report = verify_packing(&g, &trees);
        prop_assert!(!report.passed());
    }
}

#[test]
fn tree_checks() {
    let c4 = fam("C4");
    let path: EdgeSet = [Edge::new(0, 1), Edge::new(1, 2), Edge::new(2, 3)]
        .into_iter()
        .collect();
    assert!(verify_tree(&c4, &path).passed());
    let report = verify_tree(&c4, &c4.all_edges());
    assert!(report.failures().any(|c| matches!(
        c.witness,
        Some(Witness::EdgeCount {
            expected: 3,
            found: 4
        })
    )));
    assert!(report
        .failures()
        .any(|c| matches!(c.witness, Some(Witness::Cycle { .. }))));
    let p4 = fam("P4");
    let two: EdgeSet = [Edge::new(0, 1), Edge::new(2, 3)].into_iter().collect();
    let report = verify_tree(&p4, &two);
    assert!(report
        .failures()
        .any(|c| matches!(c.witness, Some(Witness::Separated { .. }))));
}

#[test]
fn listing_a_tree_twice_fails() {
    let (g, trees) = k6_packing();
    let report = verify_packing(&g, &[trees[0].clone(), trees[0].clone()]);
    assert!(report
        .failures()
        .any(|c| matches!(c.witness, Some(Witness::SharedEdge { trees: [0, 1], .. }))));
}

#[test]
fn constructed_packings_pass() {
    let k4 = fam("K4");
    let r = max_packing(&k4).unwrap();
    assert_eq!(r.packing.len(), 2);
    assert!(r.packing.verify().passed());
    let out = pack_cartesian(&k4, &k4, &r.packing, &r.packing).unwrap();
    assert_eq!(out.len(), 3);
    assert!(out.verify().passed());
}

//! Fixtures shared by the benchmarks.

use treepack::{generate, max_packing, Graph, TreePacking};

/// A factor graph together with a maximum packing of it.
pub struct Factor {
    pub name: &'static str,
    pub graph: Graph,
    pub packing: TreePacking,
}

pub fn factor(name: &'static str) -> Factor {
    let graph = generate(name.parse().expect("family shorthand")).expect("family parameters");
    let packing = max_packing(&graph).expect("connected factor").packing;
    Factor {
        name,
        graph,
        packing,
    }
}

/// Cartesian factor pairs of increasing size.
pub const CARTESIAN: [(&str, &str); 4] = [("K4", "C4"), ("K6", "K6"), ("Q4", "K5"), ("K8", "C8")];

/// One lexicographic pair per case: balanced, H-rich, G-rich.
pub const LEX: [(&str, &str); 3] = [("K4", "K4"), ("P3", "K6"), ("K6", "P3")];

/// Graphs for the oracle.
pub const ORACLE: [&str; 4] = ["K8", "Q5", "K3(4)", "K12"];

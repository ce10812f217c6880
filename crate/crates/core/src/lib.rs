//! Edge-disjoint spanning tree packings of Cartesian and lexicographic
//! product graphs.
//!
//! Given packings of the factors, [`pack_cartesian`] and [`pack_lex`] build
//! packings of the product; every result passes [`verify_packing`] before it
//! is returned. [`max_packing`] computes the exact packing number of any
//! connected graph together with a partition certificate.

pub mod cartesian;
pub mod catalog;
pub mod decomp;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod lex;
pub mod oracle;
pub mod packing;
pub mod pipeline;
pub mod product;
pub mod verify;

pub use cartesian::{cartesian_bound, pack_cartesian};
pub use catalog::{
    evaluate, table_specs, verify_proposition_row, Row, Subject, TableEntry, TableSpec,
};
pub use error::{
    CatalogError, DecompError, GraphError, OracleError, PackError, ParseError, ParseErrorKind,
    ProductError,
};
pub use family::{generate, FamilySpec};
pub use graph::{Edge, EdgeSet, Graph, Vertex};
pub use io::{read_graph, to_dot, write_graph};
pub use lex::{lex_bound, pack_lex, LexCase};
pub use oracle::{edge_bound, max_packing, tutte_bruteforce, OracleResult, TutteCertificate};
pub use packing::{PackingMethod, TreePacking};
pub use pipeline::{construct, construction_bound, pack_product, ProductPacking};
pub use product::{Factor, ProductGraph, ProductKind};
pub use verify::{verify_packing, verify_tree, Check, VerificationReport, Witness};

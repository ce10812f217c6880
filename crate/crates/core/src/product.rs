//! Cartesian and lexicographic products with their fiber structure.
//!
//! Product vertex `(u, v)` with `u` in G and `v` in H has flat id
//! `u * n2 + v`, so the fiber `H(u)` is the contiguous block
//! `u*n2 .. (u+1)*n2`. The cross-section `G(v)` collects `(u, v)` over all `u`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ParseError, ParseErrorKind, ProductError};
use crate::graph::{Edge, Graph, Vertex};
use crate::io;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Factor {
    G,
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    #[serde(rename = "lex")]
    Lexicographic,
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Lexicographic => "lex",
        })
    }
}

impl std::str::FromStr for ProductKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cartesian" => Ok(ProductKind::Cartesian),
            "lex" | "lexicographic" => Ok(ProductKind::Lexicographic),
            other => Err(format!("unknown product kind `{other}` (cartesian|lex)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductVertex {
    pub g_index: Vertex,
    pub h_index: Vertex,
}

/// The complete bipartite graph joining the fibers of an edge `u_i u_j` of G
/// in a lexicographic product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bundle {
    pub g_edge: Edge,
    /// Fiber of `g_edge.lo()`.
    pub left: Vec<Vertex>,
    /// Fiber of `g_edge.hi()`.
    pub right: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductGraph {
    kind: ProductKind,
    graph: Graph,
    g: Graph,
    h: Graph,
}

impl ProductGraph {
    pub fn cartesian(g: &Graph, h: &Graph) -> Result<Self, ProductError> {
        Self::build(ProductKind::Cartesian, g, h)
    }

    pub fn lexicographic(g: &Graph, h: &Graph) -> Result<Self, ProductError> {
        Self::build(ProductKind::Lexicographic, g, h)
    }

    pub fn build(kind: ProductKind, g: &Graph, h: &Graph) -> Result<Self, ProductError> {
        for (factor, graph) in [(Factor::G, g), (Factor::H, h)] {
            if graph.n() == 0 {
                return Err(ProductError::EmptyFactor(factor));
            }
            if !graph.is_connected() {
                return Err(ProductError::DisconnectedFactor(factor));
            }
        }
        let (n1, n2) = (g.n(), h.n());
        let id = |u: Vertex, v: Vertex| u * n2 + v;
        let mut edges = Vec::new();
        for u in 0..n1 {
            edges.extend(
                h.edges()
                    .iter()
                    .map(|e| Edge::new(id(u, e.lo()), id(u, e.hi()))),
            );
        }
        for e in g.edges() {
            match kind {
                ProductKind::Cartesian => {
                    edges.extend((0..n2).map(|v| Edge::new(id(e.lo(), v), id(e.hi(), v))));
                }
                ProductKind::Lexicographic => {
                    for a in 0..n2 {
                        edges.extend((0..n2).map(|b| Edge::new(id(e.lo(), a), id(e.hi(), b))));
                    }
                }
            }
        }
        let graph = Graph::from_edges(n1 * n2, edges).expect("product edges are simple");
        Ok(ProductGraph {
            kind,
            graph,
            g: g.clone(),
            h: h.clone(),
        })
    }

    pub fn kind(&self) -> ProductKind {
        self.kind
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn factor_g(&self) -> &Graph {
        &self.g
    }

    pub fn factor_h(&self) -> &Graph {
        &self.h
    }

    pub fn factor(&self, which: Factor) -> &Graph {
        match which {
            Factor::G => &self.g,
            Factor::H => &self.h,
        }
    }

    pub fn n1(&self) -> usize {
        self.g.n()
    }

    pub fn n2(&self) -> usize {
        self.h.n()
    }

    pub fn vertex(&self, u: Vertex, v: Vertex) -> Vertex {
        debug_assert!(u < self.n1() && v < self.n2());
        u * self.n2() + v
    }

    pub fn coords(&self, id: Vertex) -> ProductVertex {
        ProductVertex {
            g_index: id / self.n2(),
            h_index: id % self.n2(),
        }
    }

    /// The edge `(u_a, v_a)(u_b, v_b)`.
    pub fn edge(&self, (ua, va): (Vertex, Vertex), (ub, vb): (Vertex, Vertex)) -> Edge {
        Edge::new(self.vertex(ua, va), self.vertex(ub, vb))
    }

    /// Copy of an H-edge inside the fiber `H(u)`.
    pub fn fiber_edge(&self, u: Vertex, h_edge: Edge) -> Edge {
        self.edge((u, h_edge.lo()), (u, h_edge.hi()))
    }

    /// Copy of a G-edge inside the cross-section `G(v)`.
    pub fn cross_edge(&self, g_edge: Edge, v: Vertex) -> Edge {
        self.edge((g_edge.lo(), v), (g_edge.hi(), v))
    }

    pub fn fiber(&self, u: Vertex) -> Result<Vec<Vertex>, ProductError> {
        if u >= self.n1() {
            return Err(ProductError::IndexOutOfRange {
                what: "G-vertex",
                index: u,
                limit: self.n1(),
            });
        }
        Ok((0..self.n2()).map(|v| self.vertex(u, v)).collect())
    }

    pub fn cross_section(&self, v: Vertex) -> Result<Vec<Vertex>, ProductError> {
        if v >= self.n2() {
            return Err(ProductError::IndexOutOfRange {
                what: "H-vertex",
                index: v,
                limit: self.n2(),
            });
        }
        Ok((0..self.n1()).map(|u| self.vertex(u, v)).collect())
    }

    /// The `n2` edges `(u_i, v)(u_j, v)`; a perfect matching between the two
    /// fibers in either product kind.
    pub fn cross_copies(&self, g_edge: Edge) -> Result<Vec<Edge>, ProductError> {
        self.check_g_edge(g_edge)?;
        Ok((0..self.n2()).map(|v| self.cross_edge(g_edge, v)).collect())
    }

    pub fn bundle(&self, g_edge: Edge) -> Result<Bundle, ProductError> {
        if self.kind != ProductKind::Lexicographic {
            return Err(ProductError::Unsupported(
                "bundles exist only in lexicographic products; use cross_copies",
            ));
        }
        self.check_g_edge(g_edge)?;
        let left = self.fiber(g_edge.lo())?;
        let right = self.fiber(g_edge.hi())?;
        let edges = left
            .iter()
            .flat_map(|&a| right.iter().map(move |&b| Edge::new(a, b)))
            .collect();
        Ok(Bundle {
            g_edge,
            left,
            right,
            edges,
        })
    }

    fn check_g_edge(&self, g_edge: Edge) -> Result<(), ProductError> {
        if self.g.contains(&g_edge) {
            Ok(())
        } else {
            Err(ProductError::NotAFactorEdge(g_edge))
        }
    }

    /// Edge-list text preceded by `# product <kind> n1=<..> n2=<..>`.
    pub fn to_text(&self) -> String {
        format!(
            "# product {} n1={} n2={}\n{}",
            self.kind,
            self.n1(),
            self.n2(),
            io::write_graph(&self.graph)
        )
    }

    /// Parses [`ProductGraph::to_text`] output. The factors are recovered from
    /// fiber 0 and cross-section 0 (plus bundle presence for `lex`), and the
    /// graph must equal the product they generate.
    pub fn from_text(text: &str) -> Result<Self, ParseError> {
        let (line, kind, n1, n2) = parse_product_header(text)?;
        let graph = io::read_graph(text)?;
        let header_err = |msg: String| ParseError {
            line,
            kind: ParseErrorKind::ProductHeader(msg),
        };
        Self::recover(kind, n1, n2, graph).map_err(|e| header_err(e.to_string()))
    }

    pub fn recover(
        kind: ProductKind,
        n1: usize,
        n2: usize,
        graph: Graph,
    ) -> Result<Self, ProductError> {
        if n1 == 0 || n2 == 0 || n1 * n2 != graph.n() {
            return Err(ProductError::Structure(format!(
                "n1*n2 = {}*{} does not match {} vertices",
                n1,
                n2,
                graph.n()
            )));
        }
        let h_edges: Vec<Edge> = (0..n2)
            .flat_map(|a| (a + 1..n2).map(move |b| Edge::new(a, b)))
            .filter(|e| graph.has_edge(e.lo(), e.hi()))
            .collect();
        let g_edges: Vec<Edge> = (0..n1)
            .flat_map(|a| (a + 1..n1).map(move |b| Edge::new(a, b)))
            .filter(|e| graph.has_edge(e.lo() * n2, e.hi() * n2))
            .collect();
        let g = Graph::from_edges(n1, g_edges).expect("recovered factor is simple");
        let h = Graph::from_edges(n2, h_edges).expect("recovered factor is simple");
        let rebuilt = Self::build(kind, &g, &h)?;
        if rebuilt.graph != graph {
            return Err(ProductError::Structure(format!(
                "edges are not those of a {kind} product"
            )));
        }
        Ok(rebuilt)
    }
}

fn parse_product_header(text: &str) -> Result<(usize, ProductKind, usize, usize), ParseError> {
    for (idx, raw) in text.lines().enumerate() {
        let Some(rest) = raw.trim().strip_prefix('#') else {
            continue;
        };
        let mut fields = rest.split_whitespace();
        if fields.next() != Some("product") {
            continue;
        }
        let line = idx + 1;
        let bad = |msg: &str| ParseError {
            line,
            kind: ParseErrorKind::ProductHeader(msg.to_string()),
        };
        let kind: ProductKind = fields
            .next()
            .ok_or_else(|| bad("missing kind"))?
            .parse()
            .map_err(|e: String| bad(&e))?;
        let mut dim = |key: &str| {
            fields
                .next()
                .and_then(|f| f.strip_prefix(key))
                .and_then(|f| f.parse::<usize>().ok())
                .ok_or_else(|| bad(&format!("expected {key}<count>")))
        };
        let n1 = dim("n1=")?;
        let n2 = dim("n2=")?;
        return Ok((line, kind, n1, n2));
    }
    Err(ParseError {
        line: 1,
        kind: ParseErrorKind::ProductHeader("no `# product` line".to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::generate;

    fn fam(s: &str) -> Graph {
        generate(s.parse().unwrap()).unwrap()
    }

    /// Counts product edges straight from the adjacency definitions.
    fn count_by_definition(kind: ProductKind, g: &Graph, h: &Graph) -> usize {
        let verts: Vec<(usize, usize)> = (0..g.n())
            .flat_map(|u| (0..h.n()).map(move |v| (u, v)))
            .collect();
        let mut count = 0;
        for (i, &(u, v)) in verts.iter().enumerate() {
            for &(u2, v2) in &verts[i + 1..] {
                let adjacent = match kind {
                    ProductKind::Cartesian => {
                        (u == u2 && h.has_edge(v, v2)) || (v == v2 && g.has_edge(u, u2))
                    }
                    ProductKind::Lexicographic => {
                        g.has_edge(u, u2) || (u == u2 && h.has_edge(v, v2))
                    }
                };
                count += adjacent as usize;
            }
        }
        count
    }

    #[test]
    fn p2_square_is_c4() {
        let p = ProductGraph::cartesian(&fam("P2"), &fam("P2")).unwrap();
        assert_eq!((p.graph().n(), p.graph().m()), (4, 4));
        assert!((0..4).all(|v| p.graph().degree(v) == 2));
        assert!(p.graph().is_connected());
    }

    #[test]
    fn k4_by_c3_edge_count() {
        let (g, h) = (fam("K4"), fam("C3"));
        let p = ProductGraph::cartesian(&g, &h).unwrap();
        let by_def = count_by_definition(ProductKind::Cartesian, &g, &h);
        assert_eq!(by_def, 30);
        assert_eq!(p.graph().m(), 30);
        assert_eq!(p.graph().n(), 12);
    }

    #[test]
    fn lex_edge_counts_from_examples() {
        let p = ProductGraph::lexicographic(&fam("P3"), &fam("K4")).unwrap();
        assert_eq!((p.graph().n(), p.graph().m()), (12, 50));
        let p = ProductGraph::lexicographic(&fam("K4-"), &fam("P3")).unwrap();
        assert_eq!((p.graph().n(), p.graph().m()), (12, 53));
        let (g, h) = (fam("K4-"), fam("P3"));
        assert_eq!(count_by_definition(ProductKind::Lexicographic, &g, &h), 53);
    }

    #[test]
    fn k2_lex_k2_is_k4() {
        let p = ProductGraph::lexicographic(&fam("K2"), &fam("K2")).unwrap();
        assert_eq!(p.graph(), &fam("K4"));
    }

    #[test]
    fn fibers_and_sections() {
        let p = ProductGraph::lexicographic(&fam("P3"), &fam("K4")).unwrap();
        assert_eq!(p.fiber(1).unwrap(), vec![4, 5, 6, 7]);
        assert_eq!(p.cross_section(2).unwrap(), vec![2, 6, 10]);
        assert!(p.fiber(3).is_err());
        assert!(p.cross_section(4).is_err());
        let b = p.bundle(Edge::new(0, 1)).unwrap();
        assert_eq!(b.edges.len(), 16);
        assert!(b.edges.iter().all(|e| p.graph().contains(e)));
        assert!(matches!(
            p.bundle(Edge::new(0, 2)),
            Err(ProductError::NotAFactorEdge(_))
        ));
    }

    #[test]
    fn cartesian_has_no_bundles() {
        let p = ProductGraph::cartesian(&fam("P3"), &fam("K4")).unwrap();
        assert!(matches!(
            p.bundle(Edge::new(0, 1)),
            Err(ProductError::Unsupported(_))
        ));
        assert_eq!(p.cross_copies(Edge::new(0, 1)).unwrap().len(), 4);
    }

    #[test]
    fn rejects_disconnected_factor() {
        let split = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(
            ProductGraph::cartesian(&fam("P2"), &split),
            Err(ProductError::DisconnectedFactor(Factor::H))
        );
    }

    #[test]
    fn hypercube_is_iterated_square_of_p2() {
        for d in 2..=5 {
            let lower = fam(&format!("Q{}", d - 1));
            let p = ProductGraph::cartesian(&lower, &fam("P2")).unwrap();
            assert_eq!(p.graph(), &fam(&format!("Q{d}")));
        }
    }

    #[test]
    fn text_round_trip_recovers_factors() {
        for kind in [ProductKind::Cartesian, ProductKind::Lexicographic] {
            let p = ProductGraph::build(kind, &fam("P3"), &fam("C4")).unwrap();
            let text = p.to_text();
            assert!(text.starts_with(&format!("# product {kind} n1=3 n2=4\n")));
            let back = ProductGraph::from_text(&text).unwrap();
            assert_eq!(back, p);
        }
        let bogus = "# product lex n1=2 n2=2\np 4 1\ne 0 1\n";
        assert!(ProductGraph::from_text(bogus).is_err());
    }
}

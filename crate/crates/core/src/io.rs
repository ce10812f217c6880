//! Edge-list text format and DOT export.
//!
//! ```text
//! # comment
//! p <n> <m>
//! e <a> <b>      (exactly m lines, 0 <= a < b < n)
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{ParseError, ParseErrorKind};
use crate::graph::{Edge, EdgeSet, Graph};

pub fn read_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    let err = |line: usize, kind| ParseError { line, kind };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || err(line_no, ParseErrorKind::Malformed(line.to_string()));
        let mut fields = line.split_whitespace();
        let tag = fields.next().ok_or_else(malformed)?;
        let nums = fields
            .map(|f| f.parse::<usize>().map_err(|_| malformed()))
            .collect::<Result<Vec<_>, _>>()?;
        match (tag, nums.as_slice()) {
            ("p", &[n, m]) => {
                if header.is_some() {
                    return Err(err(line_no, ParseErrorKind::RepeatedHeader));
                }
                header = Some((n, m, line_no));
            }
            ("e", &[a, b]) => {
                let (n, _, _) = header.ok_or(err(line_no, ParseErrorKind::MissingHeader))?;
                let e =
                    Edge::try_new(a, b).map_err(|_| err(line_no, ParseErrorKind::SelfLoop(a)))?;
                if e.hi() >= n {
                    return Err(err(
                        line_no,
                        ParseErrorKind::OutOfRange { vertex: e.hi(), n },
                    ));
                }
                if !seen.insert(e) {
                    return Err(err(line_no, ParseErrorKind::DuplicateEdge(e)));
                }
                edges.push(e);
            }
            _ => return Err(malformed()),
        }
    }

    let (n, m, header_line) = header.ok_or(err(1, ParseErrorKind::MissingHeader))?;
    if edges.len() != m {
        return Err(err(
            header_line,
            ParseErrorKind::EdgeCount {
                declared: m,
                found: edges.len(),
            },
        ));
    }
    // Every violation Graph::from_edges checks was rejected above with a line number.
    Ok(Graph::from_edges(n, edges).expect("validated while parsing"))
}

/// Canonical text: header then edges in sorted order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.m());
    writeln!(out, "p {} {}", g.n(), g.m()).unwrap();
    for e in g.edges() {
        writeln!(out, "e {} {}", e.lo(), e.hi()).unwrap();
    }
    out
}

const PALETTE: [&str; 8] = [
    "red",
    "blue",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "magenta",
    "cyan",
];

/// DOT rendering of `g` with each of `highlight` drawn in its own colour.
/// Host edges outside every highlighted set are drawn dotted grey.
pub fn to_dot(g: &Graph, highlight: &[EdgeSet]) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match g.label(v) {
            Some(label) => {
                writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\"")).unwrap()
            }
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for e in g.edges() {
        let style = match highlight.iter().position(|s| s.contains(e)) {
            Some(i) => format!("color={}, penwidth=2", PALETTE[i % PALETTE.len()]),
            None => "color=grey, style=dotted".to_string(),
        };
        writeln!(out, "  {} -- {} [{style}];", e.lo(), e.hi()).unwrap();
    }
    out.push_str("}\n");
    out
}

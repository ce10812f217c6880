//! Graph arguments: a graph file, a family shorthand such as `K4` or `Q3`,
//! or `cartesian(A,B)` / `lex(A,B)` over further references.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use treepack::{generate, read_graph, FamilySpec, Graph, ProductGraph, ProductKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphRef {
    File(PathBuf),
    Family(FamilySpec),
    Product {
        kind: ProductKind,
        g: Box<GraphRef>,
        h: Box<GraphRef>,
    },
}

impl GraphRef {
    pub fn product(kind: ProductKind, g: GraphRef, h: GraphRef) -> Self {
        GraphRef::Product {
            kind,
            g: Box::new(g),
            h: Box::new(h),
        }
    }

    pub fn load(&self) -> Result<Graph> {
        match self {
            GraphRef::File(path) => load_file(path),
            GraphRef::Family(spec) => Ok(generate(*spec)?),
            GraphRef::Product { kind, g, h } => {
                Ok(ProductGraph::build(*kind, &g.load()?, &h.load()?)?.into_graph())
            }
        }
    }
}

fn load_file(path: &Path) -> Result<Graph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Splits `a,b` at the comma outside any parentheses.
fn split_args(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

impl FromStr for GraphRef {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        for (prefix, kind) in [
            ("cartesian(", ProductKind::Cartesian),
            ("lex(", ProductKind::Lexicographic),
        ] {
            if let Some(inner) = s.strip_prefix(prefix).and_then(|r| r.strip_suffix(')')) {
                let Some((a, b)) = split_args(inner) else {
                    bail!("expected two arguments in `{s}`");
                };
                return Ok(GraphRef::product(kind, a.parse()?, b.parse()?));
            }
        }
        if Path::new(s).is_file() {
            return Ok(GraphRef::File(PathBuf::from(s)));
        }
        match s.parse::<FamilySpec>() {
            Ok(spec) => Ok(GraphRef::Family(spec)),
            Err(e) => bail!("`{s}` is neither a readable file nor a family ({e})"),
        }
    }
}

impl fmt::Display for GraphRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphRef::File(path) => write!(f, "{}", path.display()),
            GraphRef::Family(spec) => write!(f, "{spec}"),
            GraphRef::Product { kind, g, h } => write!(f, "{kind}({g},{h})"),
        }
    }
}

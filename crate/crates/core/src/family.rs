//! Standard graph families with fixed vertex numbering.
//!
//! * path, cycle: vertices in walk order.
//! * complete multipartite `K_{n(m)}`: part `p` holds `p*m .. p*m + m`.
//! * hypercube `Q_d`: vertex ids are the binary codes, edges flip one bit.
//! * complete minus an edge: `K_n` without `{n-2, n-1}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{Edge, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// `parts` parts of `size` vertices each.
    CompleteMultipartite {
        parts: usize,
        size: usize,
    },
    Hypercube {
        dim: usize,
    },
    CompleteMinusEdge {
        n: usize,
    },
}

impl FamilySpec {
    fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteMultipartite { .. } => "complete_multipartite",
            FamilySpec::Hypercube { .. } => "hypercube",
            FamilySpec::CompleteMinusEdge { .. } => "complete_minus_edge",
        }
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |reason: &str| {
            Err(GraphError::InvalidParameter {
                family: self.family_name(),
                reason: reason.to_string(),
            })
        };
        match *self {
            FamilySpec::Path { n } | FamilySpec::Complete { n } if n < 1 => bad("n must be >= 1"),
            FamilySpec::Cycle { n } if n < 3 => bad("n must be >= 3"),
            FamilySpec::CompleteMultipartite { parts, .. } if parts < 2 => {
                bad("number of parts must be >= 2")
            }
            FamilySpec::CompleteMultipartite { size, .. } if size < 1 => {
                bad("part size must be >= 1")
            }
            FamilySpec::Hypercube { dim } if dim < 1 => bad("dimension must be >= 1"),
            FamilySpec::Hypercube { dim } if dim > 20 => bad("dimension must be <= 20"),
            FamilySpec::CompleteMinusEdge { n } if n < 3 => bad("n must be >= 3"),
            _ => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::CompleteMinusEdge { n } => n,
            FamilySpec::CompleteMultipartite { parts, size } => parts * size,
            FamilySpec::Hypercube { dim } => 1 << dim,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { n } => write!(f, "P{n}"),
            FamilySpec::Cycle { n } => write!(f, "C{n}"),
            FamilySpec::Complete { n } => write!(f, "K{n}"),
            FamilySpec::CompleteMultipartite { parts, size } => write!(f, "K{parts}({size})"),
            FamilySpec::Hypercube { dim } => write!(f, "Q{dim}"),
            FamilySpec::CompleteMinusEdge { n } => write!(f, "K{n}-"),
        }
    }
}

/// Parses the short names printed by `Display`: `P5`, `C4`, `K6`,
/// `K3(2)`, `Q3`, `K4-`.
impl FromStr for FamilySpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let invalid = || GraphError::InvalidParameter {
            family: "shorthand",
            reason: format!("cannot parse `{s}` (expected e.g. P5, C4, K6, K3(2), Q3, K4-)"),
        };
        let s = s.trim();
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(invalid)?.to_ascii_uppercase();
        let rest = chars.as_str();
        let num = |t: &str| t.parse::<usize>().map_err(|_| invalid());
        let spec = match head {
            'P' => FamilySpec::Path { n: num(rest)? },
            'C' => FamilySpec::Cycle { n: num(rest)? },
            'Q' => FamilySpec::Hypercube { dim: num(rest)? },
            'K' => {
                if let Some(n) = rest.strip_suffix('-') {
                    FamilySpec::CompleteMinusEdge { n: num(n)? }
                } else if let Some((parts, size)) =
                    rest.strip_suffix(')').and_then(|r| r.split_once('('))
                {
                    FamilySpec::CompleteMultipartite {
                        parts: num(parts)?,
                        size: num(size)?,
                    }
                } else {
                    FamilySpec::Complete { n: num(rest)? }
                }
            }
            _ => return Err(invalid()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn generate(spec: FamilySpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let n = spec.vertex_count();
    let edges: Vec<Edge> = match spec {
        FamilySpec::Path { n } => (1..n).map(|i| Edge::new(i - 1, i)).collect(),
        FamilySpec::Cycle { n } => (0..n).map(|i| Edge::new(i, (i + 1) % n)).collect(),
        FamilySpec::Complete { n } => complete_edges(n).collect(),
        FamilySpec::CompleteMinusEdge { n } => complete_edges(n)
            .filter(|e| *e != Edge::new(n - 2, n - 1))
            .collect(),
        FamilySpec::CompleteMultipartite { size, .. } => complete_edges(n)
            .filter(|e| e.lo() / size != e.hi() / size)
            .collect(),
        FamilySpec::Hypercube { dim } => (0..n)
            .flat_map(|v| {
                (0..dim)
                    .map(move |bit| v ^ (1 << bit))
                    .filter(move |&w| w > v)
                    .map(move |w| Edge::new(v, w))
            })
            .collect(),
    };
    Graph::from_edges(n, edges)
}

fn complete_edges(n: usize) -> impl Iterator<Item = Edge> {
    (0..n).flat_map(move |a| (a + 1..n).map(move |b| Edge::new(a, b)))
}

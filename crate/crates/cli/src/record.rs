use std::path::Path;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use treepack::{EdgeSet, PackingMethod, TreePacking};

/// A packing as written to disk. `graph` is a reference accepted by every
/// graph argument, so the file can be re-verified on its own.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingRecord {
    pub graph: String,
    pub method: PackingMethod,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
    pub trees: Vec<EdgeSet>,
    pub verified: bool,
}

impl PackingRecord {
    pub fn new(graph: String, packing: &TreePacking, bound: Option<usize>) -> Self {
        PackingRecord {
            graph,
            method: packing.method(),
            bound,
            trees: packing.trees().to_vec(),
            verified: packing.verify().passed(),
        }
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing packing {}", path.display()))
    }

    /// Pretty JSON with one tree per line.
    pub fn to_json(&self) -> String {
        let mut s = String::from("{\n");
        s += &format!("  \"graph\": {},\n", compact(&self.graph));
        s += &format!("  \"method\": {},\n", compact(&self.method));
        if let Some(b) = self.bound {
            s += &format!("  \"bound\": {b},\n");
        }
        s += "  \"trees\": [";
        for (i, t) in self.trees.iter().enumerate() {
            s += if i == 0 { "\n    " } else { ",\n    " };
            s += &compact(t);
        }
        s += if self.trees.is_empty() {
            "],\n"
        } else {
            "\n  ],\n"
        };
        s += &format!("  \"verified\": {}\n}}\n", self.verified);
        s
    }
}

fn compact<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("value serialises")
}

/// Summary of one command run, written to stderr.
#[derive(Debug, Serialize)]
pub struct RunRecord {
    pub command: &'static str,
    pub inputs: Vec<String>,
    pub outputs: Value,
    pub verified: Option<bool>,
    pub wall_ms: f64,
}

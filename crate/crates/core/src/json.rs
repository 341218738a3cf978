//! Graph input format:
//! `{"vertices":["a","b"],"edges":[["a","b"]],"decorations":{"a":[2],"b":[0]}}`
//! with `decorations` optional.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graphs::{DecorationMap, Graph};
use crate::monoid::Monomial;
use crate::partitions::{FiniteSet, Label};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphInput {
    vertices: Vec<String>,
    #[serde(default)]
    edges: Vec<(String, String)>,
    decorations: Option<BTreeMap<String, Vec<u32>>>,
}

/// A parsed graph file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Graph,
    pub decorations: Option<DecorationMap>,
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let before: usize = text.split_inclusive('\n').take(line.saturating_sub(1)).map(str::len).sum();
    before + column.saturating_sub(1)
}

/// Parses a graph document; errors carry the byte offset of the problem.
pub fn parse_graph(text: &str) -> Result<GraphDocument> {
    let input: GraphInput = serde_json::from_str(text).map_err(|e| Error::Parse {
        offset: byte_offset(text, e.line(), e.column()),
        message: e.to_string(),
    })?;
    let mut vertices = FiniteSet::empty();
    for v in &input.vertices {
        let label = Label::new(v)?;
        if !vertices.insert(label) {
            return Err(Error::InvalidGraph(format!("duplicate vertex {v:?}")));
        }
    }
    let edges = input
        .edges
        .iter()
        .map(|(a, b)| Ok((Label::new(a)?, Label::new(b)?)))
        .collect::<Result<Vec<_>>>()?;
    let graph = Graph::new(vertices, edges)?;
    let decorations = input
        .decorations
        .map(|d| {
            d.into_iter()
                .map(|(k, v)| Ok((Label::new(&k)?, Monomial(v))))
                .collect::<Result<DecorationMap>>()
        })
        .transpose()?;
    Ok(GraphDocument { graph, decorations })
}

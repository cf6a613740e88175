use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{CrystalGraph, Edge, Vertex};
use crate::error::{Error, Result};
use crate::tableaux::{Weight, Word};

#[derive(Serialize, Deserialize)]
struct JsonVertex {
    id: usize,
    #[serde(default)]
    word: Option<String>,
    weight: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    vertices: Vec<JsonVertex>,
    edges: Vec<Edge>,
}

pub fn to_json(g: &CrystalGraph) -> String {
    let doc = JsonGraph {
        vertices: g
            .vertices()
            .iter()
            .enumerate()
            .map(|(id, v)| JsonVertex { id, word: v.word.as_ref().map(Word::to_string), weight: v.weight.0.clone() })
            .collect(),
        edges: g.edges().to_vec(),
    };
    serde_json::to_string_pretty(&doc).expect("graph serializes")
}

/// Reads the JSON interchange format. Ids must be `0..len` in order; words
/// are optional.
pub fn from_json(text: &str) -> Result<CrystalGraph> {
    let doc: JsonGraph = serde_json::from_str(text).map_err(|e| Error::MalformedGraph(e.to_string()))?;
    let n = doc.vertices.first().map_or(1, |v| v.weight.len()) as u8;
    let mut vertices = Vec::with_capacity(doc.vertices.len());
    for (k, v) in doc.vertices.into_iter().enumerate() {
        if v.id != k {
            return Err(Error::MalformedGraph(format!("vertex ids must be 0..len in order, found {} at {k}", v.id)));
        }
        let word = match v.word {
            Some(text) => Some(Word::new(n, crate::tableaux::parse_letters(&text)?)?),
            None => None,
        };
        vertices.push(Vertex { word, weight: Weight(v.weight) });
    }
    CrystalGraph::new(n, vertices, doc.edges)
}

/// Unprimed edges solid, primed edges dashed.
pub fn to_dot(g: &CrystalGraph) -> String {
    let mut s = String::from("digraph crystal {\n  node [shape=box];\n");
    for (id, v) in g.vertices().iter().enumerate() {
        writeln!(s, "  v{id} [label=\"{}\\n{}\"];", g.label(id), v.weight).unwrap();
    }
    for e in g.edges() {
        let (label, style) = if e.primed { (format!("{}'", e.index), "dashed") } else { (e.index.to_string(), "solid") };
        writeln!(s, "  v{} -> v{} [label=\"{label}\", style={style}];", e.src, e.dst).unwrap();
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::tableaux::SkewShape;

    #[test]
    fn dot_output() {
        let g = build_graph(&SkewShape::from_parts(&[2, 1], &[]).unwrap(), 2).unwrap();
        let dot = to_dot(&g);
        assert!(dot.contains("v0 -> v1 [label=\"1'\", style=dashed];"));
        assert_eq!(dot.matches("->").count(), 1);
        let one = build_graph(&SkewShape::from_parts(&[1], &[]).unwrap(), 1).unwrap();
        assert_eq!(to_dot(&one).matches("->").count(), 0);
        assert_eq!(to_dot(&one).matches("[label=").count(), 1);
    }

    #[test]
    fn json_round_trip() {
        let g = build_graph(&SkewShape::from_parts(&[3, 1], &[1]).unwrap(), 3).unwrap();
        let back = from_json(&to_json(&g)).unwrap();
        assert_eq!(back, g);
        assert_eq!(to_json(&back), to_json(&g));
        assert!(matches!(from_json("{\"vertices\": 3}"), Err(Error::MalformedGraph(_))));
    }
}

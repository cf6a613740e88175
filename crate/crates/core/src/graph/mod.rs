//! Crystal graphs on shifted tableaux: construction, strings and their
//! statistics, components, highest weights and isomorphism.

mod export;
mod iso;
mod strings;

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ops::{apply, apply_to_tableau, Family, OpKind};
use crate::tableaux::{ShiftedTableau, SkewShape, Weight, Word};

pub use export::{from_json, to_dot, to_json};
pub use iso::{component_isomorphic, component_isomorphic_with, highest_weight};
pub use strings::{classify_string, string_stats, StatsTable, StringKind, StringShape, StringStats};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vertex {
    pub word: Option<Word>,
    pub weight: Weight,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub index: u8,
    pub primed: bool,
}

impl Edge {
    fn slot(&self) -> u8 {
        slot(self.index, self.primed)
    }
}

#[inline]
fn slot(index: u8, primed: bool) -> u8 {
    2 * (index - 1) + u8::from(primed)
}

/// A finite directed graph with vertices weighted in `Z^n_{>=0}` and edges
/// labelled `i` or `i'`, `1 <= i < n`.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    n: u8,
    shape: Option<SkewShape>,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    out: Vec<Vec<(u8, usize)>>,
    inc: Vec<Vec<(u8, usize)>>,
}

impl PartialEq for CrystalGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.vertices == other.vertices && self.edges == other.edges
    }
}

impl CrystalGraph {
    /// Validates ids, labels and weight lengths. Edges are sorted.
    pub fn new(n: u8, vertices: Vec<Vertex>, mut edges: Vec<Edge>) -> Result<Self> {
        for (id, v) in vertices.iter().enumerate() {
            if v.weight.0.len() != n as usize {
                return Err(Error::MalformedGraph(format!(
                    "vertex {id} has weight of length {}, expected {n}",
                    v.weight.0.len()
                )));
            }
            if let Some(w) = &v.word {
                if w.weight() != v.weight {
                    return Err(Error::MalformedGraph(format!("vertex {id}: word {w} does not have weight {}", v.weight)));
                }
            }
        }
        for e in &edges {
            if e.src >= vertices.len() || e.dst >= vertices.len() {
                return Err(Error::MalformedGraph(format!("edge {}->{} refers to a missing vertex", e.src, e.dst)));
            }
            if e.index == 0 || e.index >= n {
                return Err(Error::MalformedGraph(format!("edge {}->{} has label {} outside 1..{n}", e.src, e.dst, e.index)));
            }
        }
        edges.sort();
        let mut g = CrystalGraph { n, shape: None, vertices, edges, out: Vec::new(), inc: Vec::new() };
        g.index_edges();
        Ok(g)
    }

    fn index_edges(&mut self) {
        self.out = vec![Vec::new(); self.vertices.len()];
        self.inc = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            self.out[e.src].push((e.slot(), e.dst));
            self.inc[e.dst].push((e.slot(), e.src));
        }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn shape(&self) -> Option<&SkewShape> {
        self.shape.as_ref()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &Vertex {
        &self.vertices[v]
    }

    pub fn weight(&self, v: usize) -> &Weight {
        &self.vertices[v].weight
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Indices `1..n`.
    pub fn indices(&self) -> impl Iterator<Item = u8> {
        1..self.n.max(1)
    }

    /// The tableau at `v`, when the graph was built from a shape.
    pub fn tableau(&self, v: usize) -> Option<ShiftedTableau> {
        let word = self.vertices[v].word.as_ref()?;
        ShiftedTableau::from_reading_word(self.shape.clone()?, word).ok()
    }

    /// Label of vertex `v` for display: its word, or `#v` for abstract vertices.
    pub fn label(&self, v: usize) -> String {
        match &self.vertices[v].word {
            Some(w) => w.to_string(),
            None => format!("#{v}"),
        }
    }

    pub fn id_of(&self, word: &Word) -> Option<usize> {
        self.vertices.iter().position(|v| v.word.as_ref() == Some(word))
    }

    /// Follows the `i` (or `i'`) edge out of `v`.
    #[inline]
    pub fn f(&self, v: usize, i: u8, primed: bool) -> Option<usize> {
        let s = slot(i, primed);
        self.out[v].iter().find(|&&(t, _)| t == s).map(|&(_, d)| d)
    }

    /// Follows the `i` (or `i'`) edge into `v` backwards.
    #[inline]
    pub fn e(&self, v: usize, i: u8, primed: bool) -> Option<usize> {
        let s = slot(i, primed);
        self.inc[v].iter().find(|&&(t, _)| t == s).map(|&(_, d)| d)
    }

    pub fn out_degree(&self, v: usize, i: u8, primed: bool) -> usize {
        let s = slot(i, primed);
        self.out[v].iter().filter(|&&(t, _)| t == s).count()
    }

    pub fn in_degree(&self, v: usize, i: u8, primed: bool) -> usize {
        let s = slot(i, primed);
        self.inc[v].iter().filter(|&&(t, _)| t == s).count()
    }

    /// Outgoing edges of `v` as `(index, primed, target)`.
    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = (u8, bool, usize)> + '_ {
        self.out[v].iter().map(|&(s, d)| (s / 2 + 1, s % 2 == 1, d))
    }

    pub fn in_edges(&self, v: usize) -> impl Iterator<Item = (u8, bool, usize)> + '_ {
        self.inc[v].iter().map(|&(s, d)| (s / 2 + 1, s % 2 == 1, d))
    }

    /// Neighbours ignoring direction and label.
    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v].iter().chain(&self.inc[v]).map(|&(_, d)| d)
    }

    /// No incoming edges.
    pub fn is_source(&self, v: usize) -> bool {
        self.inc[v].is_empty()
    }

    /// Weakly connected components, each sorted, in order of smallest id.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                k += 1;
                for u in self.neighbours(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The subgraph induced on `ids`, renumbered in the given order.
    pub fn induced(&self, ids: &[usize]) -> CrystalGraph {
        let map: HashMap<usize, usize> = ids.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let vertices = ids.iter().map(|&v| self.vertices[v].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                Some(Edge { src: *map.get(&e.src)?, dst: *map.get(&e.dst)?, index: e.index, primed: e.primed })
            })
            .collect();
        let mut g = CrystalGraph::new(self.n, vertices, edges).expect("subgraph of a valid graph");
        g.shape = self.shape.clone();
        g
    }

    /// Removes the `k`-th edge (in sorted edge order).
    pub fn remove_edge(&mut self, k: usize) -> Edge {
        let e = self.edges.remove(k);
        self.index_edges();
        e
    }

    /// Points the `k`-th edge at a different target.
    pub fn retarget_edge(&mut self, k: usize, dst: usize) {
        self.edges[k].dst = dst;
        self.edges.sort();
        self.index_edges();
    }

    pub fn add_edge(&mut self, e: Edge) {
        self.edges.push(e);
        self.edges.sort();
        self.index_edges();
    }
}

/// The crystal on `ShST(shape, n)`: one vertex per tableau, edges for every
/// defined `F_i` and `F'_i`. Raising operators are checked to be the exact
/// reverses.
pub fn build_graph(shape: &SkewShape, n: u8) -> Result<CrystalGraph> {
    let tableaux = ShiftedTableau::enumerate(shape, n);
    let words: Vec<Word> = tableaux.iter().map(ShiftedTableau::reading_word).collect();
    let ids: HashMap<&Word, usize> = words.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let lookup = |w: &Word| -> Result<usize> {
        ids.get(w).copied().ok_or_else(|| Error::BrokenSemistandard(format!("{w} is not a tableau of shape {shape}")))
    };

    let edges: Vec<Edge> = tableaux
        .par_iter()
        .enumerate()
        .map(|(src, t)| -> Result<Vec<Edge>> {
            let mut out = Vec::new();
            for index in 1..n {
                for (family, primed) in [(Family::F, false), (Family::FPrime, true)] {
                    if let Some(u) = apply_to_tableau(OpKind::new(family, index), t)? {
                        out.push(Edge { src, dst: lookup(&u.reading_word())?, index, primed });
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    let vertices = words
        .iter()
        .map(|w| Vertex { word: Some(w.clone()), weight: w.weight() })
        .collect();
    let mut g = CrystalGraph::new(n, vertices, edges)?;
    g.shape = Some(shape.clone());

    (0..g.len()).into_par_iter().try_for_each(|v| -> Result<()> {
        let w = &words[v];
        for index in 1..n {
            for (family, primed) in [(Family::E, false), (Family::EPrime, true)] {
                let direct = apply(OpKind::new(family, index), w)?.map(|u| lookup(&u)).transpose()?;
                if direct != g.e(v, index, primed) {
                    return Err(Error::MalformedGraph(format!(
                        "{}_{index} at {w} disagrees with the reversed lowering edge",
                        family
                    )));
                }
            }
        }
        Ok(())
    })?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(outer: &[u32], inner: &[u32], n: u8) -> CrystalGraph {
        build_graph(&SkewShape::from_parts(outer, inner).unwrap(), n).unwrap()
    }

    #[test]
    fn small_graphs() {
        let g = graph(&[2, 1], &[], 2);
        assert_eq!(g.len(), 2);
        assert_eq!(g.edges(), &[Edge { src: 0, dst: 1, index: 1, primed: true }]);

        let g = graph(&[1], &[], 1);
        assert_eq!((g.len(), g.edges().len()), (1, 0));

        let g = graph(&[3], &[], 2);
        let labels: Vec<String> = (0..g.len()).map(|v| g.label(v)).collect();
        assert_eq!(labels.len(), 4);
        let top = (0..g.len()).find(|&v| g.is_source(v)).unwrap();
        assert_eq!(g.label(top), "111");
        let mut v = top;
        let mut chain = vec![g.label(v)];
        while let Some(u) = g.f(v, 1, false) {
            assert_eq!(g.f(v, 1, true), Some(u));
            chain.push(g.label(u));
            v = u;
        }
        assert_eq!(chain, ["111", "112", "122", "222"]);
    }

    #[test]
    fn components_and_induced() {
        let g = graph(&[2, 1], &[], 2);
        assert_eq!(g.components(), vec![vec![0, 1]]);
        let empty = CrystalGraph::new(2, vec![], vec![]).unwrap();
        assert!(empty.components().is_empty());

        let g = graph(&[3, 1], &[2], 2);
        let comps = g.components();
        assert_eq!(comps.iter().map(Vec::len).sum::<usize>(), g.len());
        assert!(comps.len() >= 2);
        let sub = g.induced(&comps[1]);
        assert_eq!(sub.components().len(), 1);
    }

    #[test]
    fn rejects_bad_graphs() {
        let v = |w: Vec<u32>| Vertex { word: None, weight: Weight(w) };
        let bad_label = CrystalGraph::new(2, vec![v(vec![1, 0]), v(vec![0, 1])], vec![Edge { src: 0, dst: 1, index: 2, primed: false }]);
        assert!(matches!(bad_label, Err(Error::MalformedGraph(_))));
        let bad_id = CrystalGraph::new(2, vec![v(vec![1, 0])], vec![Edge { src: 0, dst: 1, index: 1, primed: false }]);
        assert!(matches!(bad_id, Err(Error::MalformedGraph(_))));
    }
}

use std::collections::VecDeque;

use super::{CrystalGraph, StatsTable};
use crate::error::{Error, Result};

/// The unique vertex of `component` without incoming edges. Its weight must be
/// a strict partition padded with zeros.
pub fn highest_weight(g: &CrystalGraph, component: &[usize]) -> Result<usize> {
    let sources: Vec<usize> = component.iter().copied().filter(|&v| g.is_source(v)).collect();
    let [top] = sources[..] else {
        return Err(Error::NotUnique(sources.len()));
    };
    let wt = &g.weight(top).0;
    let strict = wt.windows(2).all(|p| p[0] >= p[1] && (p[0] == 0 || p[0] > p[1]));
    if strict {
        Ok(top)
    } else {
        Err(Error::NotStrictWeight(wt.clone()))
    }
}

fn sorted_labels(it: impl Iterator<Item = (u8, bool, usize)>) -> Vec<(u8, bool)> {
    let mut v: Vec<(u8, bool)> = it.map(|(i, p, _)| (i, p)).collect();
    v.sort_unstable();
    v
}

/// Builds the map `a -> b` by descending from both maxima in lockstep,
/// matching edge labels and checking weights and all string statistics.
/// Both graphs are taken to be connected.
pub fn component_isomorphic(a: &CrystalGraph, b: &CrystalGraph) -> Option<Vec<usize>> {
    component_isomorphic_with(a, &StatsTable::compute(a), b, &StatsTable::compute(b))
}

pub fn component_isomorphic_with(
    a: &CrystalGraph,
    sa: &StatsTable,
    b: &CrystalGraph,
    sb: &StatsTable,
) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.n() != b.n() {
        return None;
    }
    let all_a: Vec<usize> = (0..a.len()).collect();
    let all_b: Vec<usize> = (0..b.len()).collect();
    let (ta, tb) = (highest_weight(a, &all_a).ok()?, highest_weight(b, &all_b).ok()?);
    let mut map = vec![usize::MAX; a.len()];
    let mut used = vec![false; b.len()];
    let mut queue = VecDeque::from([(ta, tb)]);
    map[ta] = tb;
    used[tb] = true;
    while let Some((u, v)) = queue.pop_front() {
        if a.weight(u) != b.weight(v) {
            return None;
        }
        for i in a.indices() {
            if sa.get(u, i) != sb.get(v, i) || sa.kind(u, i) != sb.kind(v, i) {
                return None;
            }
        }
        if sorted_labels(a.out_edges(u)) != sorted_labels(b.out_edges(v))
            || sorted_labels(a.in_edges(u)) != sorted_labels(b.in_edges(v))
        {
            return None;
        }
        for (i, p, x) in a.out_edges(u) {
            let y = b.f(v, i, p)?;
            if map[x] == usize::MAX {
                if used[y] {
                    return None;
                }
                map[x] = y;
                used[y] = true;
                queue.push_back((x, y));
            } else if map[x] != y {
                return None;
            }
        }
    }
    map.iter().all(|&m| m != usize::MAX).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::tableaux::SkewShape;

    fn graph(outer: &[u32], inner: &[u32], n: u8) -> CrystalGraph {
        build_graph(&SkewShape::from_parts(outer, inner).unwrap(), n).unwrap()
    }

    #[test]
    fn highest_weights() {
        let g = graph(&[2, 1], &[], 2);
        let top = highest_weight(&g, &[0, 1]).unwrap();
        assert_eq!((g.label(top), g.weight(top).0.clone()), ("211".to_string(), vec![2, 1]));
        let g = graph(&[3], &[], 2);
        let all: Vec<usize> = (0..g.len()).collect();
        assert_eq!(g.label(highest_weight(&g, &all).unwrap()), "111");
        let g = graph(&[1], &[], 1);
        assert_eq!(highest_weight(&g, &[0]).unwrap(), 0);
        // two disjoint vertices have two sources
        let g = graph(&[3, 1], &[2], 2);
        let all: Vec<usize> = (0..g.len()).collect();
        assert!(matches!(highest_weight(&g, &all), Err(Error::NotUnique(_))));
    }

    #[test]
    fn isomorphism() {
        let g = graph(&[3, 1], &[], 3);
        let map = component_isomorphic(&g, &g).unwrap();
        assert!(map.iter().enumerate().all(|(k, &m)| k == m));
        assert!(component_isomorphic(&g, &graph(&[4], &[], 3)).is_none());
        assert!(component_isomorphic(&graph(&[3], &[], 2), &graph(&[2, 1], &[], 2)).is_none());
    }
}

use serde::Serialize;

use super::CrystalGraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum StringKind {
    /// Every `i` edge coincides with an `i'` edge; includes singletons.
    Collapsed,
    /// Two unprimed chains of equal length joined rung by rung with `i'` edges.
    Separated,
}

/// The `{i, i'}`-component through a vertex. For a collapsed string `lower`
/// is empty; for a separated one `upper[j] --i'--> lower[j]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StringShape {
    pub kind: StringKind,
    pub upper: Vec<usize>,
    pub lower: Vec<usize>,
}

impl StringShape {
    pub fn len(&self) -> usize {
        self.upper.len() + self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.upper.is_empty()
    }

    pub fn top(&self) -> usize {
        self.upper[0]
    }

    pub fn bottom(&self) -> usize {
        *self.lower.last().or(self.upper.last()).unwrap()
    }

    fn stats_of(&self, v: usize) -> Option<StringStats> {
        let k = self.upper.len() as u32 - 1;
        if let Some(j) = self.upper.iter().position(|&u| u == v) {
            let j = j as u32;
            return Some(match self.kind {
                StringKind::Collapsed => StringStats::collapsed(j, k - j),
                StringKind::Separated => StringStats {
                    eps: j,
                    phi: k - j + 1,
                    eps_prime: 0,
                    phi_prime: 1,
                    eps_hat: j,
                    phi_hat: k - j,
                },
            });
        }
        let j = self.lower.iter().position(|&u| u == v)? as u32;
        Some(StringStats { eps: j + 1, phi: k - j, eps_prime: 1, phi_prime: 0, eps_hat: j, phi_hat: k - j })
    }
}

/// Distances from a vertex to the top and bottom of its `{i, i'}`-string:
/// total, counting primed edges, and counting unprimed edges.
///
/// On a collapsed string every step may be taken either primed or unprimed,
/// so all three distances agree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize)]
pub struct StringStats {
    pub eps: u32,
    pub phi: u32,
    pub eps_prime: u32,
    pub phi_prime: u32,
    pub eps_hat: u32,
    pub phi_hat: u32,
}

impl StringStats {
    fn collapsed(up: u32, down: u32) -> Self {
        StringStats { eps: up, phi: down, eps_prime: up, phi_prime: down, eps_hat: up, phi_hat: down }
    }
}

/// The `{i, i'}`-component of `v`, in discovery order.
fn string_members(g: &CrystalGraph, v: usize, i: u8) -> Vec<usize> {
    let mut members = vec![v];
    let mut k = 0;
    while k < members.len() {
        let u = members[k];
        k += 1;
        for (index, _, w) in g.out_edges(u).chain(g.in_edges(u)) {
            if index == i && !members.contains(&w) {
                members.push(w);
            }
        }
    }
    members
}

fn classify_members(g: &CrystalGraph, members: &[usize], i: u8) -> Option<StringShape> {
    let degrees_ok = members.iter().all(|&u| {
        [false, true]
            .iter()
            .all(|&p| g.out_degree(u, i, p) <= 1 && g.in_degree(u, i, p) <= 1)
    });
    if !degrees_ok {
        return None;
    }
    let mut tops = members.iter().copied().filter(|&u| g.e(u, i, false).is_none() && g.e(u, i, true).is_none());
    let top = tops.next()?;
    if tops.next().is_some() {
        return None;
    }
    let edge_count: usize = members
        .iter()
        .map(|&u| g.out_edges(u).filter(|&(index, _, _)| index == i).count())
        .sum();

    let mut upper = vec![top];
    while let Some(next) = g.f(*upper.last().unwrap(), i, false) {
        if upper.contains(&next) || upper.len() > members.len() {
            return None;
        }
        upper.push(next);
    }
    let collapsed = upper.iter().all(|&u| g.f(u, i, false) == g.f(u, i, true));
    if collapsed {
        let ok = upper.len() == members.len() && edge_count == 2 * (upper.len() - 1);
        return ok.then(|| StringShape { kind: StringKind::Collapsed, upper, lower: Vec::new() });
    }
    let lower: Vec<usize> = upper.iter().map(|&u| g.f(u, i, true)).collect::<Option<_>>()?;
    let k = upper.len() - 1;
    let chained = (0..=k).all(|j| g.f(lower[j], i, false) == lower.get(j + 1).copied() && g.f(lower[j], i, true).is_none());
    let mut all: Vec<usize> = upper.iter().chain(&lower).copied().collect();
    all.sort_unstable();
    all.dedup();
    let ok = chained && all.len() == 2 * (k + 1) && members.len() == all.len() && edge_count == 3 * k + 1;
    ok.then(|| StringShape { kind: StringKind::Separated, upper, lower })
}

/// Matches the `{i, i'}`-component of `v` against the two legal string shapes.
pub fn classify_string(g: &CrystalGraph, v: usize, i: u8) -> Result<StringShape> {
    classify_members(g, &string_members(g, v, i), i).ok_or(Error::NotAString { vertex: v, index: i })
}

pub fn string_stats(g: &CrystalGraph, v: usize, i: u8) -> Result<StringStats> {
    Ok(classify_string(g, v, i)?.stats_of(v).expect("vertex lies on its own string"))
}

/// String shapes and statistics for every vertex and index. Vertices on
/// components that are not strings get no entry.
#[derive(Clone, Debug)]
pub struct StatsTable {
    n: u8,
    /// `[index - 1][vertex]`
    stats: Vec<Vec<Option<StringStats>>>,
    kinds: Vec<Vec<Option<StringKind>>>,
    /// `(index, members)` of every component that failed to classify.
    broken: Vec<(u8, Vec<usize>)>,
}

impl StatsTable {
    pub fn compute(g: &CrystalGraph) -> Self {
        let len = g.len();
        let mut stats = Vec::new();
        let mut kinds = Vec::new();
        let mut broken = Vec::new();
        for i in g.indices() {
            let mut s = vec![None; len];
            let mut kd = vec![None; len];
            let mut seen = vec![false; len];
            for v in 0..len {
                if seen[v] {
                    continue;
                }
                let mut members = string_members(g, v, i);
                for &u in &members {
                    seen[u] = true;
                }
                match classify_members(g, &members, i) {
                    Some(shape) => {
                        for &u in &members {
                            s[u] = shape.stats_of(u);
                            kd[u] = Some(shape.kind);
                        }
                    }
                    None => {
                        members.sort_unstable();
                        broken.push((i, members));
                    }
                }
            }
            stats.push(s);
            kinds.push(kd);
        }
        StatsTable { n: g.n(), stats, kinds, broken }
    }

    #[inline]
    pub fn get(&self, v: usize, i: u8) -> Option<&StringStats> {
        self.stats.get(i as usize - 1)?[v].as_ref()
    }

    #[inline]
    pub fn kind(&self, v: usize, i: u8) -> Option<StringKind> {
        self.kinds.get(i as usize - 1)?[v]
    }

    pub fn broken(&self) -> &[(u8, Vec<usize>)] {
        &self.broken
    }

    pub fn n(&self) -> u8 {
        self.n
    }
}

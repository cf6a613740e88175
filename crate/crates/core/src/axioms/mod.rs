//! Local axiom checker for crystal-like graphs.
//!
//! Every axiom is evaluated vertex by vertex; vertices whose string statistics
//! are undefined are skipped here and reported by `B1` instead.

mod rules;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CrystalGraph, StatsTable};
pub use rules::DeltaPair;
use rules::{Ctx, Finding};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub enum AxiomId {
    B1,
    B2,
    B3,
    K,
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
    A1D,
    A2D,
    A3D,
    A4D,
    A5D,
    A6D,
    A7D,
    A8D,
    XL,
    SA,
    LCas,
    LCf1,
    LTd,
}

impl AxiomId {
    pub const ALL: [AxiomId; 25] = {
        use AxiomId::*;
        [
            B1, B2, B3, K, A1, A2, A3, A4, A5, A6, A7, A8, A1D, A2D, A3D, A4D, A5D, A6D, A7D, A8D, XL, SA, LCas,
            LCf1, LTd,
        ]
    };

    pub fn name(self) -> &'static str {
        use AxiomId::*;
        match self {
            B1 => "B1",
            B2 => "B2",
            B3 => "B3",
            K => "K",
            A1 => "A1",
            A2 => "A2",
            A3 => "A3",
            A4 => "A4",
            A5 => "A5",
            A6 => "A6",
            A7 => "A7",
            A8 => "A8",
            A1D => "A1D",
            A2D => "A2D",
            A3D => "A3D",
            A4D => "A4D",
            A5D => "A5D",
            A6D => "A6D",
            A7D => "A7D",
            A8D => "A8D",
            XL => "XL",
            SA => "SA",
            LCas => "L_CAS",
            LCf1 => "L_CF1",
            LTd => "L_TD",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase();
        AxiomId::ALL
            .into_iter()
            .find(|a| a.name() == key || a.name().replace('_', "") == key)
            .ok_or_else(|| Error::Parse(format!("unknown axiom `{s}`")))
    }
}

/// Parses a comma-separated list; `all` selects every axiom.
pub fn parse_axiom_list(text: &str) -> Result<Vec<AxiomId>> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(AxiomId::ALL.to_vec());
    }
    text.split(',').filter(|s| !s.trim().is_empty()).map(str::parse).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub axiom: AxiomId,
    pub index: u8,
    pub vertices: Vec<usize>,
    pub direction: String,
    /// Radius-3 neighbourhood of the first vertex, rendered as text.
    pub picture: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} at index {} on vertices {:?}: {}", self.axiom, self.index, self.vertices, self.direction)?;
        f.write_str(&self.picture)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub instances: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub vertices: usize,
    pub edges: usize,
    pub tallies: BTreeMap<AxiomId, Tally>,
    pub violations: Vec<Violation>,
    /// Counts of `Delta` over all `(w, i)` with `f_i(w)` and `f_{i+1}(w)` defined.
    pub delta_histogram: BTreeMap<String, usize>,
    pub runtime_ms: f64,
}

impl Report {
    pub fn is_certified(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn tally(&self, axiom: AxiomId) -> Tally {
        self.tallies.get(&axiom).copied().unwrap_or_default()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} vertices, {} edges", self.vertices, self.edges)?;
        for (axiom, t) in &self.tallies {
            let status = if t.violations == 0 { "ok" } else { "FAIL" };
            writeln!(f, "{:<6} {:>8} checked {:>6} violations  {status}", axiom.name(), t.instances, t.violations)?;
        }
        if !self.delta_histogram.is_empty() {
            let parts: Vec<String> = self.delta_histogram.iter().map(|(d, c)| format!("{d}:{c}")).collect();
            writeln!(f, "delta histogram: {}", parts.join(" "))?;
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        write!(f, "{}", if self.is_certified() { "certified" } else { "violations found" })
    }
}

/// `Delta(w)` along the given (primed or unprimed) `i` and `i+1` lowering edges.
pub fn delta(g: &CrystalGraph, stats: &StatsTable, w: usize, i: u8, primed: (bool, bool)) -> Result<DeltaPair> {
    let missing = Error::MissingArrow { vertex: w, index: i };
    let x = g.f(w, i, primed.0).ok_or(missing.clone())?;
    let y = g.f(w, i + 1, primed.1).ok_or(missing.clone())?;
    Ctx { g, stats }.delta(w, i, x, y).ok_or(missing)
}

/// `Delta'(w)` along the given `i+1` and `i` raising edges.
pub fn delta_dual(g: &CrystalGraph, stats: &StatsTable, w: usize, i: u8, primed: (bool, bool)) -> Result<DeltaPair> {
    let missing = Error::MissingArrow { vertex: w, index: i };
    let x = g.e(w, i + 1, primed.0).ok_or(missing.clone())?;
    let y = g.e(w, i, primed.1).ok_or(missing.clone())?;
    Ctx { g, stats }.delta_dual(w, i, x, y).ok_or(missing)
}

fn to_violation(g: &CrystalGraph, stats: &StatsTable, axiom: AxiomId, f: Finding) -> Option<Violation> {
    let direction = f.failure?;
    let picture = neighbourhood(g, stats, &f.vertices, f.index);
    Some(Violation { axiom, index: f.index, vertices: f.vertices, direction, picture })
}

/// Tally and violations for one axiom at one vertex.
pub fn check_at(g: &CrystalGraph, stats: &StatsTable, axiom: AxiomId, w: usize) -> (Tally, Vec<Violation>) {
    let mut found = Vec::new();
    Ctx { g, stats }.eval(axiom, w, &mut found);
    let instances = found.len();
    let violations: Vec<Violation> =
        found.into_iter().filter_map(|f| to_violation(g, stats, axiom, f)).collect();
    (Tally { instances, violations: violations.len() }, violations)
}

/// Checks one axiom at every vertex.
pub fn check(g: &CrystalGraph, stats: &StatsTable, axiom: AxiomId) -> (Tally, Vec<Violation>) {
    let per_vertex: Vec<(Tally, Vec<Violation>)> =
        (0..g.len()).into_par_iter().map(|w| check_at(g, stats, axiom, w)).collect();
    let mut tally = Tally::default();
    let mut violations = Vec::new();
    for (t, v) in per_vertex {
        tally.instances += t.instances;
        tally.violations += t.violations;
        violations.extend(v);
    }
    (tally, violations)
}

pub fn check_all(g: &CrystalGraph) -> Report {
    check_selected(g, &AxiomId::ALL)
}

pub fn check_selected(g: &CrystalGraph, axioms: &[AxiomId]) -> Report {
    let start = Instant::now();
    let stats = StatsTable::compute(g);
    let mut tallies = BTreeMap::new();
    let mut violations = Vec::new();
    for &axiom in axioms {
        let (t, v) = check(g, &stats, axiom);
        tallies.insert(axiom, t);
        violations.extend(v);
    }
    let mut delta_histogram = BTreeMap::new();
    for w in 0..g.len() {
        for i in 1..g.n().saturating_sub(1) {
            if let Ok(d) = delta(g, &stats, w, i, (false, false)) {
                *delta_histogram.entry(format!("({},{})", d.d_eps_i, d.d_eps_i1)).or_insert(0) += 1;
            }
        }
    }
    Report {
        vertices: g.len(),
        edges: g.edges().len(),
        tallies,
        violations,
        delta_histogram,
        runtime_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

const PICTURE_RADIUS: usize = 3;
const PICTURE_CAP: usize = 40;

fn neighbourhood(g: &CrystalGraph, stats: &StatsTable, centre: &[usize], i: u8) -> String {
    let mut dist = BTreeMap::new();
    let mut queue = VecDeque::new();
    for &c in centre {
        dist.insert(c, 0usize);
        queue.push_back(c);
    }
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        if d == PICTURE_RADIUS || dist.len() >= PICTURE_CAP {
            continue;
        }
        for u in g.neighbours(v) {
            if !dist.contains_key(&u) && dist.len() < PICTURE_CAP {
                dist.insert(u, d + 1);
                queue.push_back(u);
            }
        }
    }
    let ids: BTreeSet<usize> = dist.keys().copied().collect();
    let mut out = String::new();
    let fmt_stats = |v: usize, j: u8| match stats.get(v, j) {
        Some(s) => format!(
            "[{},{} {},{} {},{}]",
            s.eps, s.phi, s.eps_prime, s.phi_prime, s.eps_hat, s.phi_hat
        ),
        None => "[-]".to_string(),
    };
    for &v in &ids {
        let mark = if centre.contains(&v) { "*" } else { " " };
        let mut line = format!("{mark} v{v} {} {}", g.label(v), g.weight(v));
        for j in [i, i + 1] {
            if j >= 1 && j < g.n() {
                line += &format!(" s{j}={}", fmt_stats(v, j));
            }
        }
        out += &line;
        out.push('\n');
    }
    for e in g.edges() {
        if ids.contains(&e.src) && ids.contains(&e.dst) {
            let prime = if e.primed { "'" } else { "" };
            out += &format!("  v{} -{}{}-> v{}\n", e.src, e.index, prime, e.dst);
        }
    }
    out
}

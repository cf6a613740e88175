//! Per-vertex evaluation of every axiom and lemma. Each evaluation records one
//! finding per instance it inspected, failed or not.

use super::AxiomId;
use crate::graph::{CrystalGraph, StatsTable, StringKind, StringStats};

pub(crate) struct Finding {
    pub index: u8,
    pub vertices: Vec<usize>,
    pub failure: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, serde::Serialize)]
pub struct DeltaPair {
    pub d_eps_i: i64,
    pub d_eps_i1: i64,
}

impl DeltaPair {
    fn is(self, a: i64, b: i64) -> bool {
        self.d_eps_i == a && self.d_eps_i1 == b
    }
}

type V = Option<usize>;

pub(crate) struct Ctx<'a> {
    pub g: &'a CrystalGraph,
    pub stats: &'a StatsTable,
}

fn iff(found: &mut Vec<Finding>, index: u8, vertices: Vec<usize>, structure: bool, conditions: bool) {
    let failure = match (structure, conditions) {
        (true, false) => Some("structure present but numeric conditions fail".to_string()),
        (false, true) => Some("numeric conditions hold but structure absent".to_string()),
        _ => None,
    };
    found.push(Finding { index, vertices, failure });
}

fn implies(found: &mut Vec<Finding>, index: u8, vertices: Vec<usize>, holds: bool, what: &str) {
    let failure = (!holds).then(|| what.to_string());
    found.push(Finding { index, vertices, failure });
}

/// `a == b != None`
fn meet(a: V, b: V) -> bool {
    a.is_some() && a == b
}

impl Ctx<'_> {
    fn f(&self, v: V, i: u8, p: bool) -> V {
        self.g.f(v?, i, p)
    }

    fn e(&self, v: V, i: u8, p: bool) -> V {
        self.g.e(v?, i, p)
    }

    fn s(&self, v: usize, i: u8) -> Option<StringStats> {
        self.stats.get(v, i).copied()
    }

    fn eps(&self, v: usize, i: u8) -> Option<i64> {
        self.s(v, i).map(|s| s.eps as i64)
    }

    fn phi(&self, v: usize, i: u8) -> Option<i64> {
        self.s(v, i).map(|s| s.phi as i64)
    }

    /// `(eps_i(w) - eps_i(y), eps_{i+1}(w) - eps_{i+1}(x))` for
    /// `x` below `w` along `i`, `y` below along `i+1`.
    pub fn delta(&self, w: usize, i: u8, x: usize, y: usize) -> Option<DeltaPair> {
        Some(DeltaPair {
            d_eps_i: self.eps(w, i)? - self.eps(y, i)?,
            d_eps_i1: self.eps(w, i + 1)? - self.eps(x, i + 1)?,
        })
    }

    /// `(phi_{i+1}(w) - phi_{i+1}(y), phi_i(w) - phi_i(x))` for
    /// `x` above `w` along `i+1`, `y` above along `i`.
    pub fn delta_dual(&self, w: usize, i: u8, x: usize, y: usize) -> Option<DeltaPair> {
        Some(DeltaPair {
            d_eps_i: self.phi(w, i + 1)? - self.phi(y, i + 1)?,
            d_eps_i1: self.phi(w, i)? - self.phi(x, i)?,
        })
    }

    fn pair_indices(&self) -> std::ops::Range<u8> {
        1..self.g.n().saturating_sub(1).max(1)
    }

    pub fn eval(&self, axiom: AxiomId, w: usize, found: &mut Vec<Finding>) {
        use AxiomId::*;
        match axiom {
            B1 => self.b1(w, found),
            B2 => self.b2(w, found),
            B3 => self.b3(w, found),
            K => self.k(w, found),
            XL => self.pairs(w, found, Self::xl),
            SA => self.pairs(w, found, Self::sa),
            LCas => self.pairs(w, found, Self::l_cas),
            LCf1 => self.pairs(w, found, Self::l_cf1),
            LTd => self.pairs(w, found, Self::l_td),
            A1 => self.pairs(w, found, Self::a1),
            A2 => self.pairs(w, found, Self::a2),
            A3 => self.pairs(w, found, Self::a3),
            A4 => self.pairs(w, found, Self::a4),
            A5 => self.pairs(w, found, Self::a5),
            A6 => self.pairs(w, found, Self::a6),
            A7 => self.pairs(w, found, Self::a7),
            A8 => self.pairs(w, found, Self::a8),
            A1D => self.pairs(w, found, Self::a1d),
            A2D => self.pairs(w, found, Self::a2d),
            A3D => self.pairs(w, found, Self::a3d),
            A4D => self.pairs(w, found, Self::a4d),
            A5D => self.pairs(w, found, Self::a5d),
            A6D => self.pairs(w, found, Self::a6d),
            A7D => self.pairs(w, found, Self::a7d),
            A8D => self.pairs(w, found, Self::a8d),
        }
    }

    fn pairs(&self, w: usize, found: &mut Vec<Finding>, rule: fn(&Self, usize, u8, &mut Vec<Finding>)) {
        for i in self.pair_indices() {
            rule(self, w, i, found);
        }
    }

    fn b1(&self, w: usize, found: &mut Vec<Finding>) {
        for i in self.g.indices() {
            if let Some((_, members)) = self.stats.broken().iter().find(|(bi, m)| *bi == i && m[0] == w) {
                found.push(Finding {
                    index: i,
                    vertices: members.clone(),
                    failure: Some("component is neither a separated nor a collapsed string".into()),
                });
                continue;
            }
            let Some(s) = self.s(w, i) else { continue };
            let collapsed = self.stats.kind(w, i) == Some(StringKind::Collapsed);
            let wt = self.g.weight(w);
            let (wi, wi1) = (wt.get(i as usize), wt.get(i as usize + 1));
            let top_ok = (collapsed && s.eps == 0) == (wi1 == 0);
            let bottom_ok = (collapsed && s.phi == 0) == (wi == 0);
            let failure = match (top_ok, bottom_ok) {
                (true, true) => None,
                (false, _) => Some(format!("top of a collapsed string ({}) but wt_{} = {wi1}", collapsed && s.eps == 0, i + 1)),
                (_, false) => Some(format!("bottom of a collapsed string ({}) but wt_{i} = {wi}", collapsed && s.phi == 0)),
            };
            found.push(Finding { index: i, vertices: vec![w], failure });
        }
    }

    fn b2(&self, w: usize, found: &mut Vec<Finding>) {
        let n = self.g.n();
        for i in 1..n {
            for j in 1..n {
                if i.abs_diff(j) <= 1 {
                    continue;
                }
                for p in [false, true] {
                    for q in [false, true] {
                        let wv = Some(w);
                        let mut square = |x: V, y: V, closes: bool, what: &str| {
                            if let (Some(x), Some(y)) = (x, y) {
                                implies(found, i, vec![w, x, y], closes, what);
                            }
                        };
                        if i < j {
                            let (x, y) = (self.f(wv, i, p), self.f(wv, j, q));
                            square(x, y, meet(self.f(x, j, q), self.f(y, i, p)), "lowering edges do not commute");
                            let (x, y) = (self.e(wv, i, p), self.e(wv, j, q));
                            square(x, y, meet(self.e(x, j, q), self.e(y, i, p)), "raising edges do not commute");
                        }
                        let (x, y) = (self.f(wv, i, p), self.e(wv, j, q));
                        square(x, y, meet(self.e(x, j, q), self.f(y, i, p)), "a lowering and a raising edge do not commute");
                    }
                }
            }
        }
    }

    fn b3(&self, z: usize, found: &mut Vec<Finding>) {
        let n = self.g.n();
        for (j, _, w) in self.g.out_edges(z) {
            for i in [j.wrapping_sub(1), j + 1] {
                if i == 0 || i >= n {
                    continue;
                }
                let (Some(sz), Some(sw)) = (self.s(z, i), self.s(w, i)) else { continue };
                let case1 = sw.eps == sz.eps && sw.phi == sz.phi + 1;
                let case2 = sw.eps + 1 == sz.eps && sw.phi == sz.phi;
                let what = format!(
                    "(eps_{i}, phi_{i}) goes from ({}, {}) to ({}, {})",
                    sz.eps, sz.phi, sw.eps, sw.phi
                );
                implies(found, i, vec![z, w], case1 || case2, &what);
            }
        }
    }

    fn k(&self, w: usize, found: &mut Vec<Finding>) {
        let wt = self.g.weight(w);
        for i in self.g.indices() {
            for p in [false, true] {
                let (dout, din) = (self.g.out_degree(w, i, p), self.g.in_degree(w, i, p));
                let label = if p { format!("{i}'") } else { i.to_string() };
                implies(found, i, vec![w], dout <= 1 && din <= 1, &format!("{dout} outgoing and {din} incoming {label} edges"));
            }
            if let Some(s) = self.s(w, i) {
                let pairing = wt.pairing(i as usize);
                let holds = s.phi as i64 - s.eps as i64 == pairing;
                implies(found, i, vec![w], holds, &format!("phi - eps = {} but <wt, alpha_{i}> = {pairing}", s.phi as i64 - s.eps as i64));
            }
        }
        for (i, p, u) in self.g.out_edges(w) {
            let lowered = wt.lowered(i as usize);
            let weight_ok = lowered.as_ref() == Some(self.g.weight(u));
            implies(found, i, vec![w, u], weight_ok, "edge does not lower the weight by alpha_i");
            if let (Some(sw), Some(su)) = (self.s(w, i), self.s(u, i)) {
                let ok = su.eps == sw.eps + 1 && su.phi + 1 == sw.phi;
                let label = if p { "primed" } else { "unprimed" };
                implies(found, i, vec![w, u], ok, &format!("eps/phi do not shift by one along a {label} edge"));
            }
        }
    }

    fn xl(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let (Some(si), Some(si1)) = (self.s(w, i), self.s(w, i + 1)) else { return };
        if si.eps_hat == 0 && si.phi_prime == 0 && si1.phi_hat == 0 && si1.eps_prime == 0 {
            let touching = self
                .g
                .out_edges(w)
                .chain(self.g.in_edges(w))
                .any(|(j, _, _)| j == i || j == i + 1);
            implies(found, i, vec![w], !touching, "excluded lengths at a vertex with i or i+1 edges");
        }
    }

    fn sa(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let wv = Some(w);
        if let (Some(x), Some(y), None) = (self.f(wv, i, false), self.f(wv, i + 1, false), self.f(wv, i, true)) {
            if let Some(d) = self.delta(w, i, x, y) {
                if d.is(0, 0) {
                    let (Some(sw), Some(sy)) = (self.s(w, i), self.s(y, i)) else { return };
                    let c7 = sw.eps_hat as i64 - sy.eps_hat as i64 == -1;
                    let c8 = sy.phi_hat >= 2;
                    implies(found, i, vec![w, x, y], c7 || c8, "neither octagon condition holds at Delta = (0,0)");
                }
            }
        }
        if let (Some(x), Some(y), None) = (self.e(wv, i + 1, false), self.e(wv, i, false), self.e(wv, i + 1, true)) {
            if let Some(d) = self.delta_dual(w, i, x, y) {
                if d.is(0, 0) {
                    let (Some(sw), Some(sy)) = (self.s(w, i + 1), self.s(y, i + 1)) else { return };
                    let c7 = sw.phi_hat as i64 - sy.phi_hat as i64 == -1;
                    let c8 = self.s(y, i + 1).is_some_and(|s| s.eps_hat >= 2);
                    implies(found, i, vec![w, x, y], c7 || c8, "neither dual octagon condition holds at Delta' = (0,0)");
                }
            }
        }
    }

    fn collapsed(&self, v: usize, i: u8) -> Option<bool> {
        self.stats.kind(v, i).map(|k| k == StringKind::Collapsed)
    }

    fn l_cas(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        for (j, _, z) in self.g.out_edges(w) {
            if j == i {
                let (Some(pw), Some(pz)) = (self.phi(w, i + 1), self.phi(z, i + 1)) else { continue };
                let (Some(cw), Some(cz)) = (self.collapsed(w, i + 1), self.collapsed(z, i + 1)) else { continue };
                if pz == pw + 1 {
                    implies(found, i, vec![w, z], cw == cz, "collapsedness of the (i+1)-string changes although phi_{i+1} grows");
                } else if pz == pw {
                    implies(found, i, vec![w, z], !cz, "(i+1)-string below is collapsed although phi_{i+1} is unchanged");
                }
            } else if j == i + 1 {
                let (Some(cw), Some(cz)) = (self.collapsed(w, i), self.collapsed(z, i)) else { continue };
                let (Some(pw), Some(pz)) = (self.phi(w, i), self.phi(z, i)) else { continue };
                iff(found, i, vec![w, z], cw, cz && pz == pw);
            }
        }
    }

    fn l_cf1(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let Some(z) = self.g.f(w, i, true) else { return };
        let (Some(pw), Some(pz)) = (self.phi(w, i + 1), self.phi(z, i + 1)) else { return };
        if pw == pz {
            let hat = self.s(z, i + 1).map_or(0, |s| s.phi_hat);
            implies(found, i, vec![w, z], hat == 0, "phi_hat_{i+1} is positive after a primed i edge that keeps phi_{i+1}");
        }
    }

    fn l_td(&self, z: usize, i: u8, found: &mut Vec<Finding>) {
        let zv = Some(z);
        let (Some(t), Some(x), Some(y)) = (self.f(zv, i, true), self.f(zv, i, false), self.f(zv, i + 1, false)) else { return };
        if t == x {
            return;
        }
        let (ft, ft1) = (self.g.f(t, i, false), self.g.f(t, i + 1, false));
        let (Some(xt), Some(yt)) = (ft, ft1) else {
            implies(found, i, vec![z, t], false, "f_i or f_{i+1} undefined at the end of the primed rung");
            return;
        };
        let (Some(dz), Some(dt)) = (self.delta(z, i, x, y), self.delta(t, i, xt, yt)) else { return };
        implies(found, i, vec![z, t], dz == dt, &format!("Delta changes from {dz:?} to {dt:?} along the primed rung"));
    }

    fn a1(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let wv = Some(w);
        let (Some(x), Some(y)) = (self.f(wv, i, true), self.f(wv, i + 1, true)) else { return };
        let closes = meet(self.f(Some(y), i, true), self.f(Some(x), i + 1, true));
        implies(found, i, vec![w, x, y], closes, "primed square does not close");
    }

    fn a2(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let wv = Some(w);
        let (Some(x), Some(y)) = (self.f(wv, i, true), self.f(wv, i + 1, true)) else { return };
        let (Some(d), Some(s1)) = (self.delta(w, i, x, y), self.s(w, i + 1)) else { return };
        let bottom = self.f(Some(y), i, false);
        let structure = meet(bottom, self.f(Some(x), i + 1, false)) && self.f(Some(y), i, true) != bottom;
        iff(found, i, vec![w, x, y], structure, d.is(0, 0) && s1.phi == 1 && s1.phi_hat == 0);
    }

    fn a3(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let wv = Some(w);
        let (Some(x), Some(y)) = (self.f(wv, i, true), self.f(wv, i + 1, false)) else { return };
        if self.f(wv, i + 1, true) != Some(y) || self.f(wv, i, false) != Some(x) {
            let closes = meet(self.f(Some(y), i, true), self.f(Some(x), i + 1, false));
            implies(found, i, vec![w, x, y], closes, "{f'_i, f_{i+1}} square does not close");
        }
    }

    fn a4(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let wv = Some(w);
        let (Some(x), Some(y)) = (self.f(wv, i, false), self.f(wv, i + 1, true)) else { return };
        let Some(sw) = self.s(w, i) else { return };
        let structure = meet(self.f(Some(y), i, false), self.f(Some(x), i + 1, true));
        iff(found, i, vec![w, x, y], structure, sw.eps_hat > 0);
    }

    /// `x = f_i(w)`, `y = f_{i+1}(w)` with `f'_i(w)` undefined.
    fn solid_pair(&self, w: usize, i: u8) -> Option<(usize, usize, DeltaPair)> {
        let wv = Some(w);
        let (x, y) = (self.f(wv, i, false)?, self.f(wv, i + 1, false)?);
        if self.f(wv, i, true).is_some() {
            return None;
        }
        Some((x, y, self.delta(w, i, x, y)?))
    }

    fn a5(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let Some((x, y, d)) = self.solid_pair(w, i) else { return };
        let structure = meet(self.f(Some(y), i, true), self.f(Some(x), i + 1, true));
        iff(found, i, vec![w, x, y], structure, d.is(1, 1));
    }

    fn a6(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let Some((x, y, d)) = self.solid_pair(w, i) else { return };
        let structure = meet(self.f(Some(y), i, false), self.f(Some(x), i + 1, false));
        iff(found, i, vec![w, x, y], structure, d.is(1, 0) || d.is(0, 1));
    }

    fn a7(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let Some((x, y, d)) = self.solid_pair(w, i) else { return };
        let (Some(sw), Some(sy)) = (self.s(w, i), self.s(y, i)) else { return };
        let (xv, yv) = (Some(x), Some(y));
        let left = self.f(self.f(self.f(yv, i, false), i, true), i + 1, false);
        let right = self.f(self.f(self.f(xv, i + 1, false), i + 1, false), i, true);
        let structure = meet(left, right) && self.f(yv, i, false) != self.f(xv, i + 1, false);
        let conditions = d.is(0, 0) && sw.eps_hat as i64 - sy.eps_hat as i64 == -1;
        iff(found, i, vec![w, x, y], structure, conditions);
    }

    fn a8(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let Some((x, y, d)) = self.solid_pair(w, i) else { return };
        let Some(sy) = self.s(y, i) else { return };
        let (xv, yv) = (Some(x), Some(y));
        let left = self.f(self.f(self.f(yv, i, false), i, false), i + 1, false);
        let right = self.f(self.f(self.f(xv, i + 1, false), i + 1, false), i, false);
        let structure = meet(left, right) && self.f(yv, i, false) != self.f(xv, i + 1, false);
        iff(found, i, vec![w, x, y], structure, d.is(0, 0) && sy.phi_hat >= 2);
    }

    fn a1d(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let wv = Some(w);
        let (Some(x), Some(y)) = (self.e(wv, i + 1, true), self.e(wv, i, true)) else { return };
        let closes = meet(self.e(Some(y), i + 1, true), self.e(Some(x), i, true));
        implies(found, i, vec![w, x, y], closes, "dual primed square does not close");
    }

    fn a2d(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let wv = Some(w);
        let (Some(x), Some(y)) = (self.e(wv, i + 1, true), self.e(wv, i, true)) else { return };
        let (Some(d), Some(si)) = (self.delta_dual(w, i, x, y), self.s(w, i)) else { return };
        let top = self.e(Some(y), i + 1, false);
        let structure = meet(top, self.e(Some(x), i, false)) && self.e(Some(y), i + 1, true) != top;
        iff(found, i, vec![w, x, y], structure, d.is(0, 0) && si.eps == 1 && si.eps_hat == 0);
    }

    fn a3d(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let wv = Some(w);
        let (Some(x), Some(y)) = (self.e(wv, i + 1, true), self.e(wv, i, false)) else { return };
        if self.e(wv, i, true) != Some(y) || self.e(wv, i + 1, false) != Some(x) {
            let closes = meet(self.e(Some(y), i + 1, true), self.e(Some(x), i, false));
            implies(found, i, vec![w, x, y], closes, "{e'_{i+1}, e_i} square does not close");
        }
    }

    fn a4d(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let wv = Some(w);
        let (Some(x), Some(y)) = (self.e(wv, i + 1, false), self.e(wv, i, true)) else { return };
        let Some(s1) = self.s(w, i + 1) else { return };
        let structure = meet(self.e(Some(y), i + 1, false), self.e(Some(x), i, true));
        iff(found, i, vec![w, x, y], structure, s1.phi_hat > 0);
    }

    /// `x = e_{i+1}(w)`, `y = e_i(w)` with `e'_{i+1}(w)` undefined.
    fn solid_pair_dual(&self, w: usize, i: u8) -> Option<(usize, usize, DeltaPair)> {
        let wv = Some(w);
        let (x, y) = (self.e(wv, i + 1, false)?, self.e(wv, i, false)?);
        if self.e(wv, i + 1, true).is_some() {
            return None;
        }
        Some((x, y, self.delta_dual(w, i, x, y)?))
    }

    fn a5d(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let Some((x, y, d)) = self.solid_pair_dual(w, i) else { return };
        let structure = meet(self.e(Some(y), i + 1, true), self.e(Some(x), i, true));
        iff(found, i, vec![w, x, y], structure, d.is(1, 1));
    }

    fn a6d(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let Some((x, y, d)) = self.solid_pair_dual(w, i) else { return };
        let structure = meet(self.e(Some(y), i + 1, false), self.e(Some(x), i, false));
        iff(found, i, vec![w, x, y], structure, d.is(1, 0) || d.is(0, 1));
    }

    fn a7d(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let Some((x, y, d)) = self.solid_pair_dual(w, i) else { return };
        let (Some(sw), Some(sy)) = (self.s(w, i + 1), self.s(y, i + 1)) else { return };
        let (xv, yv) = (Some(x), Some(y));
        let left = self.e(self.e(self.e(yv, i + 1, false), i + 1, true), i, false);
        let right = self.e(self.e(self.e(xv, i, false), i, false), i + 1, true);
        let structure = meet(left, right) && self.e(yv, i + 1, false) != self.e(xv, i, false);
        let conditions = d.is(0, 0) && sw.phi_hat as i64 - sy.phi_hat as i64 == -1;
        iff(found, i, vec![w, x, y], structure, conditions);
    }

    fn a8d(&self, w: usize, i: u8, found: &mut Vec<Finding>) {
        let Some((x, y, d)) = self.solid_pair_dual(w, i) else { return };
        let Some(sy) = self.s(y, i + 1) else { return };
        let (xv, yv) = (Some(x), Some(y));
        let left = self.e(self.e(self.e(yv, i + 1, false), i + 1, false), i, false);
        let right = self.e(self.e(self.e(xv, i, false), i, false), i + 1, false);
        let structure = meet(left, right) && self.e(yv, i + 1, false) != self.e(xv, i, false);
        iff(found, i, vec![w, x, y], structure, d.is(0, 0) && sy.eps_hat >= 2);
    }
}

//! Weight generating functions and highest-weight expansions of skew crystals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::graph::{build_graph, highest_weight};
use crate::{ShiftedTableau, SkewShape, StrictPartition};

/// Integer polynomial in `x_1..x_n`, keyed by exponent vector.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn monomial(exponents: Vec<u32>, coeff: i64) -> Self {
        let mut p = Polynomial::zero(exponents.len());
        p.add_term(exponents, coeff);
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.terms
    }

    pub fn coeff(&self, exponents: &[u32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: i64) {
        assert_eq!(exponents.len(), self.n, "exponent vector length");
        let c = self.terms.entry(exponents).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    /// Invariant under every transposition of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        (1..self.n).all(|k| {
            self.terms.iter().all(|(e, &c)| {
                let mut s = e.clone();
                s.swap(k - 1, k);
                self.coeff(&s) == c
            })
        })
    }

    /// Divides each coefficient by `f(exponents)`; `None` if some division is inexact.
    pub fn divide_terms(&self, f: impl Fn(&[u32]) -> i64) -> Option<Polynomial> {
        let mut out = Polynomial::zero(self.n);
        for (e, &c) in &self.terms {
            let d = f(e);
            if c % d != 0 {
                return None;
            }
            out.add_term(e.clone(), c / d);
        }
        Some(out)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (e, &c) in &rhs.terms {
            self.add_term(e.clone(), c);
        }
    }
}

impl Mul<i64> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, k: i64) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        if k != 0 {
            out.terms = self.terms.iter().map(|(e, &c)| (e.clone(), c * k)).collect();
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // largest exponent vectors first
        for (k, (e, &c)) in self.terms.iter().rev().enumerate() {
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(v, &a)| if a == 1 { format!("x{}", v + 1) } else { format!("x{}^{a}", v + 1) })
                .collect();
            let sign = if c < 0 { "-" } else { "+" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            let abs = c.unsigned_abs();
            match (abs, vars.is_empty()) {
                (_, true) => write!(f, "{abs}")?,
                (1, false) => write!(f, "{}", vars.join("*"))?,
                _ => write!(f, "{abs}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Sum of `x^wt(T)` over the given tableaux.
pub fn genfun<'a>(tableaux: impl IntoIterator<Item = &'a ShiftedTableau>, n: u8) -> Polynomial {
    let mut p = Polynomial::zero(n as usize);
    for t in tableaux {
        p.add_term(t.weight().0, 1);
    }
    p
}

/// Weight generating function of the canonical tableaux of shape `shape`.
pub fn shape_genfun(shape: &SkewShape, n: u8) -> Polynomial {
    genfun(&ShiftedTableau::enumerate(shape, n), n)
}

/// Schur `P`: all marked shifted fillings of `sigma` with unprimed diagonal.
pub fn schur_p(sigma: &StrictPartition, n: u8) -> Polynomial {
    // Cells row by row, top to bottom; each cell is checked against its
    // left and upper neighbours, which are filled first.
    let cells: Vec<(usize, usize)> = sigma
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (r..r + len as usize).map(move |c| (r, c)))
        .collect();
    let index: BTreeMap<(usize, usize), usize> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    // letters encoded as 2v - 1 for v', 2v for v
    let mut p = Polynomial::zero(n as usize);
    let mut fill = vec![0u32; cells.len()];

    fn go(
        k: usize,
        n: u8,
        cells: &[(usize, usize)],
        index: &BTreeMap<(usize, usize), usize>,
        fill: &mut Vec<u32>,
        p: &mut Polynomial,
    ) {
        if k == cells.len() {
            let mut e = vec![0u32; n as usize];
            for &code in fill.iter() {
                e[(code as usize + 1) / 2 - 1] += 1;
            }
            p.add_term(e, 1);
            return;
        }
        let (r, c) = cells[k];
        for code in 1..=2 * n as u32 {
            let primed = code % 2 == 1;
            if r == c && primed {
                continue;
            }
            if c > r {
                if let Some(&j) = index.get(&(r, c - 1)) {
                    // rows weakly increase; primed letters do not repeat in a row
                    if fill[j] > code || (fill[j] == code && primed) {
                        continue;
                    }
                }
            }
            if r > 0 {
                if let Some(&j) = index.get(&(r - 1, c)) {
                    // columns weakly increase; unprimed letters do not repeat in a column
                    if fill[j] > code || (fill[j] == code && !primed) {
                        continue;
                    }
                }
            }
            fill[k] = code;
            go(k + 1, n, cells, index, fill, p);
        }
    }

    go(0, n, &cells, &index, &mut fill, &mut p);
    assert!(p.is_symmetric(), "P_{sigma} in {n} variables is not symmetric");
    p
}

/// Schur `Q = 2^len(sigma) P`.
pub fn schur_q(sigma: &StrictPartition, n: u8) -> Polynomial {
    let q = &schur_p(sigma, n) * (1 << sigma.len());
    assert!(q.is_symmetric());
    q
}

/// `Q_sigma` with each monomial `x^a` divided by `2^(number of nonzero a_i)`.
pub fn schur_q_rescaled(sigma: &StrictPartition, n: u8) -> Option<Polynomial> {
    schur_q(sigma, n).divide_terms(|e| 1 << e.iter().filter(|&&a| a > 0).count())
}

/// JSON object keys must be strings, so partitions are written as `(3,1)`.
fn partition_keys<V: Serialize, S: Serializer>(
    map: &BTreeMap<StrictPartition, V>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(map.iter().map(|(k, v)| (k.to_string(), v)))
}

/// Multiset of highest weights, one per connected component.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct Expansion {
    #[serde(serialize_with = "partition_keys")]
    pub terms: BTreeMap<StrictPartition, usize>,
}

impl Expansion {
    pub fn multiplicity(&self, sigma: &StrictPartition) -> usize {
        self.terms.get(sigma).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.terms.values().sum()
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(s, m)| format!("[{s}] x{m}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

pub fn expand(shape: &SkewShape, n: u8) -> Result<Expansion> {
    let g = build_graph(shape, n)?;
    let mut terms = BTreeMap::new();
    for comp in g.components() {
        let top = highest_weight(&g, &comp)?;
        let sigma = StrictPartition::from_weight(&g.weight(top).0)?;
        *terms.entry(sigma).or_insert(0) += 1;
    }
    Ok(Expansion { terms })
}

/// Which classical polynomial the canonical generating function of a straight shape equals.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Convention {
    pub p: bool,
    pub q: bool,
    pub q_rescaled: bool,
}

impl Convention {
    pub fn of(sigma: &StrictPartition, n: u8) -> Convention {
        let g = shape_genfun(&SkewShape::straight(sigma.clone()), n);
        Convention {
            p: g == schur_p(sigma, n),
            q: g == schur_q(sigma, n),
            q_rescaled: Some(&g) == schur_q_rescaled(sigma, n).as_ref(),
        }
    }

    pub fn names(self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (hit, name) in [(self.p, "P"), (self.q, "Q"), (self.q_rescaled, "q_rescaled")] {
            if hit {
                out.push(name);
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpansionReport {
    pub shape: String,
    pub n: u8,
    pub expansion: Expansion,
    pub genfun: Polynomial,
    pub recombined: Polynomial,
    pub identity_holds: bool,
    #[serde(serialize_with = "partition_keys")]
    pub conventions: BTreeMap<StrictPartition, Convention>,
}

impl fmt::Display for ExpansionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.identity_holds { "identity OK" } else { "identity FAILED" };
        writeln!(f, "Q-expansion: {} = {} ; {status}", self.shape, self.expansion)?;
        writeln!(f, "genfun: {}", self.genfun)?;
        if !self.identity_holds {
            writeln!(f, "recombined: {}", self.recombined)?;
        }
        for (sigma, c) in &self.conventions {
            let names = c.names();
            let shown = if names.is_empty() { "neither P nor Q".to_string() } else { names.join(", ") };
            writeln!(f, "genfun [{sigma}] matches: {shown}")?;
        }
        Ok(())
    }
}

/// Checks `genfun(shape) = sum m_sigma genfun(sigma)` exactly and classifies each `sigma`.
pub fn verify_expansion(shape: &SkewShape, n: u8) -> Result<ExpansionReport> {
    let expansion = expand(shape, n)?;
    let lhs = shape_genfun(shape, n);
    let mut rhs = Polynomial::zero(n as usize);
    let mut conventions = BTreeMap::new();
    for (sigma, &m) in &expansion.terms {
        rhs += &(&shape_genfun(&SkewShape::straight(sigma.clone()), n) * m as i64);
        conventions.insert(sigma.clone(), Convention::of(sigma, n));
    }
    Ok(ExpansionReport {
        shape: shape.to_string(),
        n,
        identity_holds: lhs == rhs,
        expansion,
        genfun: lhs,
        recombined: rhs,
        conventions,
    })
}

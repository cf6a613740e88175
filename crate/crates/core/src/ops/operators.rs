use std::fmt;
use std::str::FromStr;

use super::critical::{final_critical_substring, index_representatives, Side};
use crate::error::{Error, Result};
use crate::tableaux::{first_occurrences, standard_ranks, Letter, RawWord, ShiftedTableau, Word};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    F,
    E,
    FPrime,
    EPrime,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::F, Family::E, Family::FPrime, Family::EPrime];

    pub fn is_primed(self) -> bool {
        matches!(self, Family::FPrime | Family::EPrime)
    }

    pub fn side(self) -> Side {
        match self {
            Family::F | Family::FPrime => Side::Lower,
            Family::E | Family::EPrime => Side::Raise,
        }
    }

    /// The partial inverse.
    pub fn inverse(self) -> Family {
        match self {
            Family::F => Family::E,
            Family::E => Family::F,
            Family::FPrime => Family::EPrime,
            Family::EPrime => Family::FPrime,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::F => "F",
            Family::E => "E",
            Family::FPrime => "F'",
            Family::EPrime => "E'",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "F" | "f" => Ok(Family::F),
            "E" | "e" => Ok(Family::E),
            "F'" | "f'" | "Fprime" => Ok(Family::FPrime),
            "E'" | "e'" | "Eprime" => Ok(Family::EPrime),
            other => Err(Error::Parse(format!("unknown operator `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct OpKind {
    pub family: Family,
    pub index: u8,
}

impl OpKind {
    pub fn new(family: Family, index: u8) -> Self {
        OpKind { family, index }
    }

    pub fn check(self, n: u8) -> Result<()> {
        if self.index >= 1 && self.index < n {
            Ok(())
        } else {
            Err(Error::InvalidIndex { index: self.index, n })
        }
    }
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::F => write!(f, "F_{}", self.index),
            Family::E => write!(f, "E_{}", self.index),
            Family::FPrime => write!(f, "F'_{}", self.index),
            Family::EPrime => write!(f, "E'_{}", self.index),
        }
    }
}

/// Changes the last `from` to `to` in the first representative where it sits
/// right of the last `blocker`.
fn primed_rule(w: &Word, i: u8, from: Letter, to: Letter, blocker: Letter) -> Option<Word> {
    let mut result: Option<Word> = None;
    for rep in index_representatives(w, i) {
        let letters = rep.letters();
        let Some(p) = letters.iter().rposition(|&l| l == from) else { continue };
        if letters.iter().rposition(|&l| l == blocker).is_some_and(|q| q > p) {
            continue;
        }
        let mut changed = letters.to_vec();
        changed[p] = to;
        let out = RawWord::new(w.n(), changed).unwrap().canonicalize();
        match &result {
            None => result = Some(out),
            Some(prev) => {
                debug_assert_eq!(prev, &out, "representatives of {w} disagree");
                if !cfg!(debug_assertions) {
                    break;
                }
            }
        }
    }
    result
}

fn apply_unchecked(op: OpKind, w: &Word) -> Option<Word> {
    let i = op.index;
    match op.family {
        Family::F | Family::E => final_critical_substring(w, i, op.family.side())?.transform(),
        Family::FPrime => primed_rule(w, i, Letter::unprimed(i), Letter::primed(i + 1), Letter::primed(i + 1)),
        Family::EPrime => primed_rule(w, i, Letter::primed(i + 1), Letter::unprimed(i), Letter::unprimed(i)),
    }
}

/// Applies an operator to a canonical word; `Ok(None)` when undefined.
pub fn apply(op: OpKind, w: &Word) -> Result<Option<Word>> {
    op.check(w.n())?;
    Ok(apply_unchecked(op, w))
}

/// Applies an operator through the reading word, keeping the shape.
pub fn apply_to_tableau(op: OpKind, t: &ShiftedTableau) -> Result<Option<ShiftedTableau>> {
    op.check(t.n())?;
    match apply_unchecked(op, &t.reading_word()) {
        Some(w) => t.with_reading_word(&w).map(Some),
        None => Ok(None),
    }
}

/// Brute-force characterization of the primed operators: the unique canonical
/// word with the same standardization whose weight moves by `alpha_i`.
///
/// Standardization is monotone in the letter order, so the value at every
/// position is forced by the target weight; only the primes are searched.
pub fn primed_by_standardization(w: &Word, i: u8, side: Side) -> Result<Option<Word>> {
    let n = w.n();
    OpKind::new(Family::FPrime, i).check(n)?;
    let mut target = w.weight();
    target = match side {
        Side::Lower => match target.lowered(i as usize) {
            Some(t) => t,
            None => return Ok(None),
        },
        Side::Raise => match target.raised(i as usize) {
            Some(t) => t,
            None => return Ok(None),
        },
    };
    let ranks = standard_ranks(w.letters());
    let len = w.len();
    let mut values_by_rank = Vec::with_capacity(len);
    for (v, &count) in target.0.iter().enumerate() {
        values_by_rank.extend(std::iter::repeat(v as u8 + 1).take(count as usize));
    }
    let values: Vec<u8> = ranks.iter().map(|&r| values_by_rank[r as usize - 1]).collect();

    let mut hits = Vec::new();
    for mask in 0u64..(1 << len) {
        let letters: Vec<Letter> =
            (0..len).map(|p| Letter::new(values[p], mask & (1 << p) != 0)).collect();
        let canonical = first_occurrences(&letters).iter().all(|&p| !letters[p].is_primed());
        if canonical && standard_ranks(&letters) == ranks {
            hits.push(Word::new(n, letters).unwrap());
        }
    }
    assert!(hits.len() <= 1, "standardization does not determine a unique word from {w}");
    Ok(hits.pop())
}

/// The direct description of `E'_2`: move the last `3'` (counting the first
/// `3` as primed) down to `2`, swapping primes with a lone `2` if needed.
pub fn alternate_e2prime(w: &Word) -> Option<Word> {
    alternate_e2prime_with(w, LoneTwo::Family)
}

/// What counts as "the only 2" in the alternate `E'_2` rule.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LoneTwo {
    /// exactly one letter of the 2-family
    Family,
    /// exactly one unprimed 2, any number of 2'
    Unprimed,
}

pub fn alternate_e2prime_with(w: &Word, lone: LoneTwo) -> Option<Word> {
    let letters = w.letters();
    let first_three = letters.iter().position(|l| l.value() == 3)?;
    let mut as_primed = letters.to_vec();
    as_primed[first_three] = Letter::primed(3);
    let x = as_primed.iter().rposition(|&l| l == Letter::primed(3))?;

    let twos: Vec<usize> = match lone {
        LoneTwo::Family => (0..letters.len()).filter(|&p| letters[p].value() == 2).collect(),
        LoneTwo::Unprimed => (0..letters.len()).filter(|&p| letters[p] == Letter::unprimed(2)).collect(),
    };
    if let [y] = twos[..] {
        if letters[y] == Letter::unprimed(2) && x < y {
            let mut out = letters.to_vec();
            out[x] = Letter::unprimed(2);
            out[y] = Letter::primed(2);
            return Some(RawWord::new(w.n(), out).unwrap().canonicalize());
        }
    }
    let mut changed = as_primed.clone();
    changed[x] = Letter::unprimed(2);
    if standard_ranks(&changed) == standard_ranks(&as_primed) {
        Some(RawWord::new(w.n(), changed).unwrap().canonicalize())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::SkewShape;

    fn word(n: u8, s: &str) -> Word {
        Word::parse(n, s).unwrap()
    }

    fn op(s: &str, i: u8) -> OpKind {
        OpKind::new(s.parse().unwrap(), i)
    }

    #[test]
    fn primed_examples() {
        assert_eq!(apply(op("F'", 1), &word(2, "211")).unwrap().unwrap().to_string(), "212'");
        assert_eq!(apply(op("F'", 1), &word(2, "11")).unwrap().unwrap().to_string(), "12");
        assert_eq!(apply(op("E'", 1), &word(2, "212'")).unwrap().unwrap().to_string(), "211");
        assert_eq!(apply(op("F'", 1), &word(2, "22")).unwrap(), None);
        assert_eq!(apply(op("F", 2), &word(2, "11")), Err(Error::InvalidIndex { index: 2, n: 2 }));
    }

    #[test]
    fn oracle_examples() {
        let lower = |s: &str| primed_by_standardization(&word(2, s), 1, Side::Lower).unwrap();
        assert_eq!(lower("211").unwrap().to_string(), "212'");
        assert_eq!(lower("11").unwrap().to_string(), "12");
        assert_eq!(lower("22"), None);
    }

    #[test]
    fn unprimed_examples() {
        assert_eq!(apply(op("F", 1), &word(2, "11")).unwrap().unwrap().to_string(), "12");
        assert_eq!(apply(op("F", 1), &word(2, "12")).unwrap().unwrap().to_string(), "22");
        assert_eq!(apply(op("E", 1), &word(2, "22")).unwrap().unwrap().to_string(), "12");
        assert_eq!(apply(op("F", 1), &word(2, "211")).unwrap(), None);
    }

    #[test]
    fn tableau_examples() {
        let t = ShiftedTableau::parse(3, "1 1 1 1 1 2 3 / 2 2 2 3 3 / 3 3").unwrap();
        let out = apply_to_tableau(op("F", 1), &t).unwrap().unwrap();
        assert_eq!(out.to_string(), "1 1 1 1 2 2 3\n2 2 2 3 3\n3 3");

        let t = ShiftedTableau::parse(2, "1 1 / 2").unwrap();
        let out = apply_to_tableau(op("F'", 1), &t).unwrap().unwrap();
        assert_eq!(out.to_string(), "1 2'\n2");
        assert_eq!(apply_to_tableau(op("F", 1), &t).unwrap(), None);

        let empty = ShiftedTableau::enumerate(&SkewShape::from_parts(&[], &[]).unwrap(), 2).remove(0);
        for family in Family::ALL {
            assert_eq!(apply_to_tableau(OpKind::new(family, 1), &empty).unwrap(), None);
        }
    }

    #[test]
    fn lone_two_readings() {
        let mut disagree = [0usize; 2];
        for size in 0..=6 {
            for sigma in crate::tableaux::StrictPartition::of_size(size) {
                for t in ShiftedTableau::enumerate_straight(&sigma, 3) {
                    let w = t.reading_word();
                    let expected = apply(op("E'", 2), &w).unwrap();
                    for (k, lone) in [LoneTwo::Family, LoneTwo::Unprimed].into_iter().enumerate() {
                        if alternate_e2prime_with(&w, lone) != expected {
                            disagree[k] += 1;
                        }
                    }
                }
            }
        }
        eprintln!("alternate E'_2 disagreements (family, unprimed): {disagree:?}");
        assert_eq!(disagree[0], 0);
    }
}

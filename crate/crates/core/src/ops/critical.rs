use std::fmt;

use super::walk::{lattice_walk, Point, Rel};
use crate::tableaux::{first_occurrences, RawWord, Word};

/// Lowering (`F`) or raising (`E`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Lower,
    Raise,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum CriticalKind {
    F1,
    F2,
    F3,
    F4,
    F5,
    E1,
    E2,
    E3,
    E4,
    E5,
}

impl CriticalKind {
    /// Type 5 substrings make the operator undefined.
    pub fn is_blocking(self) -> bool {
        matches!(self, CriticalKind::F5 | CriticalKind::E5)
    }
}

impl fmt::Display for CriticalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CriticalKind::F1 => "1F",
            CriticalKind::F2 => "2F",
            CriticalKind::F3 => "3F",
            CriticalKind::F4 => "4F",
            CriticalKind::F5 => "5F",
            CriticalKind::E1 => "1E",
            CriticalKind::E2 => "2E",
            CriticalKind::E3 => "3E",
            CriticalKind::E4 => "4E",
            CriticalKind::E5 => "5E",
        };
        f.write_str(s)
    }
}

/// A critical substring of one representative, contiguous within the
/// `{i, i', i+1, (i+1)'}` subword.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CriticalMatch {
    pub kind: CriticalKind,
    pub index: u8,
    pub representative: RawWord,
    /// Positions in the full word, increasing.
    pub positions: Vec<usize>,
    /// Walk point just before the substring.
    pub location: Point,
}

impl CriticalMatch {
    pub fn start(&self) -> usize {
        self.positions[0]
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// The transformed representative, canonicalized; `None` for type 5.
    pub fn transform(&self) -> Option<Word> {
        use CriticalKind::*;
        let i = self.index;
        let (first, last) = match self.kind {
            F1 => (Rel::TwoPrime, Rel::Two),
            F2 => (Rel::TwoPrime, Rel::One),
            F3 => (Rel::Two, Rel::Two),
            F4 => (Rel::TwoPrime, Rel::TwoPrime),
            E1 => (Rel::One, Rel::OnePrime),
            E2 => (Rel::One, Rel::TwoPrime),
            E3 => (Rel::OnePrime, Rel::OnePrime),
            E4 => (Rel::One, Rel::One),
            F5 | E5 => return None,
        };
        let mut letters = self.representative.letters().to_vec();
        letters[self.start()] = first.letter(i);
        letters[*self.positions.last().unwrap()] = last.letter(i);
        let raw = RawWord::new(self.representative.n(), letters).expect("letters stay in range");
        Some(raw.canonicalize())
    }
}

/// Representatives differing only in the first `i`- and `(i+1)`-family
/// letters; the others are irrelevant to index `i`.
pub(crate) fn index_representatives(w: &Word, i: u8) -> Vec<RawWord> {
    let letters = w.letters();
    let toggles: Vec<usize> = first_occurrences(letters)
        .into_iter()
        .filter(|&p| letters[p].value() == i || letters[p].value() == i + 1)
        .collect();
    crate::tableaux::toggle_all(letters, &toggles)
        .into_iter()
        .map(|l| RawWord::new(w.n(), l).expect("toggling keeps values"))
        .collect()
}

/// Index of the first letter after `k` that is not `fill`, if it equals `end`.
fn run_end(rel: &[Rel], k: usize, fill: Rel, end: Rel) -> Option<usize> {
    let j = (k + 1..rel.len()).find(|&j| rel[j] != fill)?;
    (rel[j] == end).then_some(j)
}

fn matches_in(rep: &RawWord, i: u8, side: Side, out: &mut Vec<CriticalMatch>) {
    use CriticalKind::*;
    let walk = lattice_walk(rep.letters(), i);
    let pos: Vec<usize> = walk.steps.iter().map(|s| s.position).collect();
    let rel: Vec<Rel> = walk.steps.iter().map(|s| Rel::of(s.letter, i).unwrap()).collect();
    let mut push = |kind, k: usize, j: usize, location| {
        out.push(CriticalMatch {
            kind,
            index: i,
            representative: rep.clone(),
            positions: pos[k..=j].to_vec(),
            location,
        });
    };
    for (k, step) in walk.steps.iter().enumerate() {
        let (x, y) = step.from;
        let near_x_axis = y == 0 || (y == 1 && x >= 1);
        let near_y_axis = x == 0 || (x == 1 && y >= 1);
        match (side, rel[k]) {
            (Side::Lower, Rel::One) => {
                if let Some(j) = run_end(&rel, k, Rel::OnePrime, Rel::TwoPrime) {
                    if near_x_axis {
                        push(F1, k, j, (x, y));
                    }
                }
                if let Some(j) = run_end(&rel, k, Rel::Two, Rel::OnePrime) {
                    if near_y_axis {
                        push(F2, k, j, (x, y));
                    }
                }
                if y == 0 {
                    push(F3, k, k, (x, y));
                }
                if x == 1 && y >= 1 {
                    push(F5, k, k, (x, y));
                }
            }
            (Side::Lower, Rel::OnePrime) if x == 0 => push(F4, k, k, (x, y)),
            (Side::Lower, Rel::TwoPrime) if x == 1 && y >= 1 => push(F5, k, k, (x, y)),
            (Side::Raise, Rel::TwoPrime) => {
                if let Some(j) = run_end(&rel, k, Rel::Two, Rel::One) {
                    if near_y_axis {
                        push(E1, k, j, (x, y));
                    }
                }
                if let Some(j) = run_end(&rel, k, Rel::OnePrime, Rel::Two) {
                    if near_x_axis {
                        push(E2, k, j, (x, y));
                    }
                }
                if x == 0 {
                    push(E3, k, k, (x, y));
                }
                if y == 1 && x >= 1 {
                    push(E5, k, k, (x, y));
                }
            }
            (Side::Raise, Rel::Two) if y == 0 => push(E4, k, k, (x, y)),
            (Side::Raise, Rel::One) if y == 1 && x >= 1 => push(E5, k, k, (x, y)),
            _ => {}
        }
    }
}

/// Every critical substring of every relevant representative.
pub fn critical_substrings(w: &Word, i: u8, side: Side) -> Vec<CriticalMatch> {
    let mut out = Vec::new();
    for rep in index_representatives(w, i) {
        matches_in(&rep, i, side, &mut out);
    }
    out
}

/// The match with the highest start, longest on ties.
pub fn final_critical_substring(w: &Word, i: u8, side: Side) -> Option<CriticalMatch> {
    let all = critical_substrings(w, i, side);
    let best = all.iter().map(|m| (m.start(), m.len())).max()?;
    let mut tied = all.into_iter().filter(|m| (m.start(), m.len()) == best);
    let chosen = tied.next().unwrap();
    if cfg!(debug_assertions) {
        let expected = chosen.transform();
        for other in tied {
            debug_assert_eq!(
                other.transform(),
                expected,
                "tied final critical substrings {} and {} of {w} disagree",
                chosen.kind,
                other.kind
            );
        }
    }
    Some(chosen)
}

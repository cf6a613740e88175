use std::fmt;

use super::letter::Letter;
use super::shape::{Cell, SkewShape, StrictPartition};
use super::word::{first_occurrences, parse_letters, Weight, Word};
use crate::error::{Error, Result};

/// A semistandard shifted tableau in canonical form.
///
/// Entries are stored in reading order, aligned with [`SkewShape::cells`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ShiftedTableau {
    shape: SkewShape,
    n: u8,
    entries: Vec<Letter>,
}

/// `left` may sit immediately left of `right` in a row.
#[inline]
pub(crate) fn row_ok(left: Letter, right: Letter) -> bool {
    left < right || (left == right && !left.is_primed())
}

/// `above` may sit immediately above `below` in a column.
#[inline]
pub(crate) fn col_ok(above: Letter, below: Letter) -> bool {
    above < below || (above == below && above.is_primed())
}

/// Checks the local row/column rules for a filling given in reading order.
/// Canonical form is not checked.
pub(crate) fn is_semistandard_filling(shape: &SkewShape, entries: &[Letter]) -> bool {
    shape.cells().iter().enumerate().all(|(k, &(r, c))| {
        let here = entries[k];
        let left_ok = match shape.position((r, c - 1)) {
            Some(j) => row_ok(entries[j], here),
            None => true,
        };
        let up_ok = match shape.position((r - 1, c)) {
            Some(j) => col_ok(entries[j], here),
            None => true,
        };
        left_ok && up_ok
    })
}

fn describe(shape: &SkewShape, entries: &[Letter]) -> String {
    let rows: Vec<String> = (1..=shape.rows())
        .map(|r| {
            shape
                .row_cells(r)
                .map(|cell| entries[shape.position(cell).unwrap()].to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    format!("{shape}: {}", rows.join(" / "))
}

impl ShiftedTableau {
    /// Validates bounds, semistandardness and canonical form.
    pub fn new(shape: SkewShape, n: u8, entries: Vec<Letter>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::Parse(format!(
                "{} entries for a shape with {} cells",
                entries.len(),
                shape.size()
            )));
        }
        // bounds and canonical form
        Word::new(n, entries.clone())?;
        if !is_semistandard_filling(&shape, &entries) {
            return Err(Error::BrokenSemistandard(describe(&shape, &entries)));
        }
        Ok(ShiftedTableau { shape, n, entries })
    }

    /// The tableau of the given shape whose reading word is `word`.
    pub fn from_reading_word(shape: SkewShape, word: &Word) -> Result<Self> {
        ShiftedTableau::new(shape, word.n(), word.letters().to_vec())
    }

    /// Parses rows given top row first, separated by newlines or `/`;
    /// `.` marks a cell of the inner shape.
    pub fn parse(n: u8, text: &str) -> Result<Self> {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows: Vec<Vec<Letter>> = Vec::new();
        for line in text.split(['\n', '/']).map(str::trim).filter(|l| !l.is_empty()) {
            let toks: Vec<&str> = line.split_whitespace().collect();
            let dots = toks.iter().take_while(|t| **t == ".").count();
            let mut row = Vec::new();
            for tok in &toks[dots..] {
                let mut ls = parse_letters(tok)?;
                if *tok == "." || ls.len() != 1 {
                    return Err(Error::Parse(format!("bad tableau entry `{tok}`")));
                }
                row.push(ls.pop().unwrap());
            }
            outer.push(toks.len() as u32);
            inner.push(dots as u32);
            rows.push(row);
        }
        while inner.last() == Some(&0) {
            inner.pop();
        }
        let shape = SkewShape::from_parts(&outer, &inner)?;
        let entries: Vec<Letter> = rows.into_iter().rev().flatten().collect();
        ShiftedTableau::new(shape, n, entries)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn entries(&self) -> &[Letter] {
        &self.entries
    }

    pub fn entry(&self, cell: Cell) -> Option<Letter> {
        self.shape.position(cell).map(|k| self.entries[k])
    }

    pub fn reading_word(&self) -> Word {
        Word::from_letters_unchecked(self.n, &self.entries)
    }

    pub fn weight(&self) -> Weight {
        Weight::of(self.n, &self.entries)
    }

    fn row_letters(&self, r: usize) -> impl Iterator<Item = Letter> + '_ {
        self.shape.row_cells(r).map(move |cell| self.entry(cell).unwrap())
    }

    /// Second row nonempty, a single 2-family letter lying in the top row,
    /// and no `3'` in the top row.
    pub fn is_special(&self) -> bool {
        if self.shape.row_cells(2).next().is_none() {
            return false;
        }
        let twos: Vec<Cell> = self
            .shape
            .cells()
            .iter()
            .copied()
            .filter(|&cell| self.entry(cell).unwrap().value() == 2)
            .collect();
        let single_two_on_top = twos.len() == 1 && twos[0].0 == 1;
        single_two_on_top && !self.row_letters(1).any(|l| l == Letter::primed(3))
    }

    /// All canonical semistandard fillings of `shape` with letters up to `n`,
    /// sorted lexicographically by reading word.
    pub fn enumerate(shape: &SkewShape, n: u8) -> Vec<ShiftedTableau> {
        // Filling in reading order means the left and lower neighbours of a
        // cell are always placed before it.
        let size = shape.size();
        let neighbours: Vec<(Option<usize>, Option<usize>)> = shape
            .cells()
            .iter()
            .map(|&(r, c)| (shape.position((r, c - 1)), shape.position((r + 1, c))))
            .collect();
        let alphabet: Vec<Letter> = Letter::alphabet(n).collect();
        let mut out = Vec::new();
        let mut cur: Vec<Letter> = Vec::with_capacity(size);
        let mut seen = vec![0u32; n as usize + 1];

        fn go(
            k: usize,
            shape: &SkewShape,
            n: u8,
            neighbours: &[(Option<usize>, Option<usize>)],
            alphabet: &[Letter],
            cur: &mut Vec<Letter>,
            seen: &mut Vec<u32>,
            out: &mut Vec<ShiftedTableau>,
        ) {
            if k == neighbours.len() {
                out.push(ShiftedTableau { shape: shape.clone(), n, entries: cur.clone() });
                return;
            }
            let (left, below) = neighbours[k];
            for &l in alphabet {
                if let Some(j) = left {
                    if !row_ok(cur[j], l) {
                        continue;
                    }
                }
                if let Some(j) = below {
                    if !col_ok(l, cur[j]) {
                        continue;
                    }
                }
                let v = l.value() as usize;
                if seen[v] == 0 && l.is_primed() {
                    continue;
                }
                seen[v] += 1;
                cur.push(l);
                go(k + 1, shape, n, neighbours, alphabet, cur, seen, out);
                cur.pop();
                seen[v] -= 1;
            }
        }

        go(0, shape, n, &neighbours, &alphabet, &mut cur, &mut seen, &mut out);
        out
    }

    /// Canonical tableaux of straight shape `sigma`.
    pub fn enumerate_straight(sigma: &StrictPartition, n: u8) -> Vec<ShiftedTableau> {
        ShiftedTableau::enumerate(&SkewShape::straight(sigma.clone()), n)
    }

    /// Replaces the entries, keeping the shape; validates the result.
    pub fn with_reading_word(&self, word: &Word) -> Result<ShiftedTableau> {
        if word.len() != self.entries.len() {
            return Err(Error::Parse("reading word length does not match the shape".into()));
        }
        if !is_semistandard_filling(&self.shape, word.letters()) {
            return Err(Error::BrokenSemistandard(describe(&self.shape, word.letters())));
        }
        debug_assert!(first_occurrences(word.letters())
            .iter()
            .all(|&p| !word.letters()[p].is_primed()));
        Ok(ShiftedTableau { shape: self.shape.clone(), n: self.n, entries: word.letters().to_vec() })
    }
}

impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.shape.rows() {
            if r > 1 {
                writeln!(f)?;
            }
            let dots = self.shape.inner().part(r - 1) as usize;
            let mut toks: Vec<String> = vec![".".to_string(); dots];
            toks.extend(self.row_letters(r).map(|l| l.to_string()));
            f.write_str(&toks.join(" "))?;
        }
        Ok(())
    }
}

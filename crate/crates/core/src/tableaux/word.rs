//! Words over the marked alphabet, their canonical form and the
//! statistics that only depend on the word.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::letter::Letter;
use crate::error::{Error, Result};

/// An arbitrary priming of a word. Operators are defined on classes of these.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct RawWord {
    n: u8,
    letters: Vec<Letter>,
}

/// A word in canonical form: for every value present, its leftmost
/// occurrence is unprimed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Word {
    n: u8,
    letters: Vec<Letter>,
}

/// Letter counts per value, primed and unprimed together. Index 0 holds value 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<u32>);

/// Standardization ranks, one per position, forming a permutation of `1..=len`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StandardWord {
    pub ranks: Vec<u32>,
}

fn check_bounds(n: u8, letters: &[Letter]) -> Result<()> {
    for l in letters {
        if l.value() == 0 || l.value() > n {
            return Err(Error::LetterOutOfRange { value: l.value() as u32, n });
        }
    }
    Ok(())
}

/// Parses `3111'21'12'`, or whitespace separated tokens such as `10 3' 12`.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    let text = text.trim();
    let mut out = Vec::new();
    if text.chars().any(char::is_whitespace) {
        for tok in text.split_whitespace() {
            let (digits, primed) = match tok.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (tok, false),
            };
            let v: u8 = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad letter `{tok}`")))?;
            out.push(Letter::new(v, primed));
        }
        return Ok(out);
    }
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        let v = c
            .to_digit(10)
            .ok_or_else(|| Error::Parse(format!("unexpected character `{c}`")))?;
        let primed = chars.next_if_eq(&'\'').is_some();
        out.push(Letter::new(v as u8, primed));
    }
    Ok(out)
}

fn write_letters(f: &mut fmt::Formatter<'_>, n: u8, letters: &[Letter]) -> fmt::Result {
    let sep = if n > 9 { " " } else { "" };
    for (k, l) in letters.iter().enumerate() {
        if k > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

/// Unprimes the first occurrence of every value.
fn canonical_letters(letters: &[Letter]) -> Vec<Letter> {
    let mut seen = [false; 256];
    letters
        .iter()
        .map(|&l| {
            let v = l.value() as usize;
            if seen[v] {
                l
            } else {
                seen[v] = true;
                l.with_prime(false)
            }
        })
        .collect()
}

/// Positions of the first occurrence of each value, in order of appearance.
pub(crate) fn first_occurrences(letters: &[Letter]) -> Vec<usize> {
    let mut seen = [false; 256];
    let mut out = Vec::new();
    for (p, l) in letters.iter().enumerate() {
        let v = l.value() as usize;
        if !seen[v] {
            seen[v] = true;
            out.push(p);
        }
    }
    out
}

/// Every way of toggling the primes at the given positions. Mask bit `k`
/// toggles `positions[k]`; mask 0 is the input itself.
pub(crate) fn toggle_all(letters: &[Letter], positions: &[usize]) -> Vec<Vec<Letter>> {
    (0u32..(1 << positions.len()))
        .map(|mask| {
            let mut v = letters.to_vec();
            for (k, &p) in positions.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    v[p] = v[p].toggled();
                }
            }
            v
        })
        .collect()
}

pub(crate) fn standard_ranks(letters: &[Letter]) -> Vec<u32> {
    let mut order: Vec<usize> = (0..letters.len()).collect();
    // primed ties go right to left, unprimed ties left to right
    order.sort_by_key(|&p| {
        let l = letters[p];
        let tie = if l.is_primed() { -(p as i64) } else { p as i64 };
        (l, tie)
    });
    let mut ranks = vec![0; letters.len()];
    for (r, &p) in order.iter().enumerate() {
        ranks[p] = r as u32 + 1;
    }
    ranks
}

impl RawWord {
    pub fn new(n: u8, letters: Vec<Letter>) -> Result<Self> {
        check_bounds(n, &letters)?;
        Ok(RawWord { n, letters })
    }

    pub fn parse(n: u8, text: &str) -> Result<Self> {
        RawWord::new(n, parse_letters(text)?)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn canonicalize(&self) -> Word {
        Word { n: self.n, letters: canonical_letters(&self.letters) }
    }

    pub fn weight(&self) -> Weight {
        Weight::of(self.n, &self.letters)
    }

    pub fn standardize(&self) -> StandardWord {
        StandardWord { ranks: standard_ranks(&self.letters) }
    }
}

impl Word {
    /// Builds a word, rejecting letters above `n` and non-canonical primings.
    pub fn new(n: u8, letters: Vec<Letter>) -> Result<Self> {
        check_bounds(n, &letters)?;
        for p in first_occurrences(&letters) {
            if letters[p].is_primed() {
                return Err(Error::NotCanonical(letters[p].value()));
            }
        }
        Ok(Word { n, letters })
    }

    pub fn empty(n: u8) -> Self {
        Word { n, letters: Vec::new() }
    }

    /// Parses and canonicalizes.
    pub fn parse(n: u8, text: &str) -> Result<Self> {
        Ok(RawWord::parse(n, text)?.canonicalize())
    }

    /// Canonicalizes letters already known to be within range.
    pub(crate) fn from_letters_unchecked(n: u8, letters: &[Letter]) -> Self {
        Word { n, letters: canonical_letters(letters) }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn as_raw(&self) -> RawWord {
        RawWord { n: self.n, letters: self.letters.clone() }
    }

    pub fn weight(&self) -> Weight {
        Weight::of(self.n, &self.letters)
    }

    pub fn standardize(&self) -> StandardWord {
        StandardWord { ranks: standard_ranks(&self.letters) }
    }

    /// All `2^k` primings of the first occurrences, `k` the number of distinct values.
    pub fn representatives(&self) -> Vec<RawWord> {
        toggle_all(&self.letters, &first_occurrences(&self.letters))
            .into_iter()
            .map(|letters| RawWord { n: self.n, letters })
            .collect()
    }

    /// The weight-reversing involution: `i <-> (n+1-i)'`, then canonicalize.
    pub fn eta(&self) -> Word {
        let n = self.n;
        let swapped: Vec<Letter> = self
            .letters
            .iter()
            .map(|l| Letter::new(n + 1 - l.value(), !l.is_primed()))
            .collect();
        Word { n, letters: canonical_letters(&swapped) }
    }
}

impl fmt::Display for RawWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, self.n, &self.letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, self.n, &self.letters)
    }
}

impl Weight {
    pub fn zero(n: u8) -> Self {
        Weight(vec![0; n as usize])
    }

    pub fn of(n: u8, letters: &[Letter]) -> Self {
        let mut w = vec![0; n as usize];
        for l in letters {
            w[l.value() as usize - 1] += 1;
        }
        Weight(w)
    }

    /// Count of value `i` (1-based).
    pub fn get(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `self - alpha_i`, i.e. the weight after a lowering step at `i`.
    pub fn lowered(&self, i: usize) -> Option<Weight> {
        let mut w = self.0.clone();
        w[i - 1] = w[i - 1].checked_sub(1)?;
        w[i] += 1;
        Some(Weight(w))
    }

    pub fn raised(&self, i: usize) -> Option<Weight> {
        let mut w = self.0.clone();
        w[i] = w[i].checked_sub(1)?;
        w[i - 1] += 1;
        Some(Weight(w))
    }

    /// `<wt, alpha_i>`
    pub fn pairing(&self, i: usize) -> i64 {
        self.get(i) as i64 - self.get(i + 1) as i64
    }

    pub fn reversed(&self) -> Weight {
        Weight(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for StandardWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.ranks.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(s: &str) -> RawWord {
        RawWord::parse(3, s).unwrap()
    }

    fn word(s: &str) -> Word {
        let w = raw(s);
        Word::new(w.n(), w.letters().to_vec()).unwrap()
    }

    #[test]
    fn parses_and_prints() {
        assert_eq!(raw("3111'21'12'").to_string(), "3111'21'12'");
        let big = RawWord::parse(12, "10 3' 12").unwrap();
        assert_eq!(big.letters()[0], Letter::unprimed(10));
        assert_eq!(big.to_string(), "10 3' 12");
        assert!(RawWord::parse(2, "13").is_err());
        assert!(matches!(RawWord::parse(3, "1x"), Err(Error::Parse(_))));
    }

    #[test]
    fn weight_examples() {
        // the word carries five letters of value 1
        assert_eq!(raw("3111'21'12'").weight(), Weight(vec![5, 2, 1]));
        assert_eq!(RawWord::parse(2, "211").unwrap().weight(), Weight(vec![2, 1]));
        assert_eq!(Word::empty(4).weight(), Weight(vec![0; 4]));
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(raw("2'11").canonicalize().to_string(), "211");
        assert_eq!(raw("211").canonicalize().to_string(), "211");
        let c = raw("12'2'").canonicalize();
        assert_eq!(c.to_string(), "122'");
        assert_eq!(c.as_raw().canonicalize(), c);
    }

    #[test]
    fn rejects_non_canonical() {
        assert_eq!(
            Word::new(2, parse_letters("2'11").unwrap()),
            Err(Error::NotCanonical(2))
        );
    }

    #[test]
    fn representative_examples() {
        let reps: Vec<String> = word("11").representatives().iter().map(|r| r.to_string()).collect();
        assert_eq!(reps, ["11", "1'1"]);
        let reps: Vec<String> = word("211").representatives().iter().map(|r| r.to_string()).collect();
        assert_eq!(reps, ["211", "2'11", "21'1", "2'1'1"]);
        assert_eq!(Word::empty(2).representatives().len(), 1);
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(word("3111'21'12'").standardize().ranks, vec![8, 3, 4, 2, 7, 1, 5, 6]);
        assert_eq!(word("11").standardize().ranks, vec![1, 2]);
        assert_eq!(raw("1'1").standardize(), word("11").standardize());
    }

    #[test]
    fn eta_examples() {
        let w = word("33'122'132");
        assert_eq!(w.eta().to_string(), "113223'1'2'");
        assert_eq!(w.eta().eta(), w);
        assert_eq!(Word::empty(3).eta(), Word::empty(3));
    }
}

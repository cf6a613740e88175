use std::fmt;

use crate::tableaux::Letter;

pub type Point = (u32, u32);

/// A letter of the `{i, i', i+1, (i+1)'}` subword, relabelled to index 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Rel {
    One,
    OnePrime,
    Two,
    TwoPrime,
}

impl Rel {
    pub(crate) fn of(l: Letter, i: u8) -> Option<Rel> {
        match (l.value() == i, l.value() == i + 1, l.is_primed()) {
            (true, _, false) => Some(Rel::One),
            (true, _, true) => Some(Rel::OnePrime),
            (_, true, false) => Some(Rel::Two),
            (_, true, true) => Some(Rel::TwoPrime),
            _ => None,
        }
    }

    pub(crate) fn letter(self, i: u8) -> Letter {
        match self {
            Rel::One => Letter::unprimed(i),
            Rel::OnePrime => Letter::primed(i),
            Rel::Two => Letter::unprimed(i + 1),
            Rel::TwoPrime => Letter::primed(i + 1),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Dir {
    North,
    East,
    South,
    West,
}

impl Dir {
    /// On an axis primed and unprimed letters agree; inside the quadrant
    /// every letter has its own direction.
    pub(crate) fn of(rel: Rel, (x, y): Point) -> Dir {
        let on_axis = x == 0 || y == 0;
        match rel {
            Rel::One if on_axis => Dir::East,
            Rel::One => Dir::South,
            Rel::OnePrime => Dir::East,
            Rel::Two => Dir::North,
            Rel::TwoPrime if on_axis => Dir::North,
            Rel::TwoPrime => Dir::West,
        }
    }

    pub(crate) fn step(self, (x, y): Point) -> Point {
        match self {
            Dir::North => (x, y + 1),
            Dir::East => (x + 1, y),
            Dir::South => (x, y - 1),
            Dir::West => (x - 1, y),
        }
    }
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dir::North => "N",
            Dir::East => "E",
            Dir::South => "S",
            Dir::West => "W",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Step {
    /// Position of the letter in the full word.
    pub position: usize,
    pub letter: Letter,
    pub from: Point,
    pub to: Point,
    pub dir: Dir,
}

/// The `i`-th lattice walk of a word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Walk {
    pub index: u8,
    pub steps: Vec<Step>,
}

impl Walk {
    /// Every point visited, starting at the origin.
    pub fn points(&self) -> Vec<Point> {
        std::iter::once((0, 0)).chain(self.steps.iter().map(|s| s.to)).collect()
    }

    pub fn endpoint(&self) -> Point {
        self.steps.last().map_or((0, 0), |s| s.to)
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            let ((x0, y0), (x1, y1)) = (s.from, s.to);
            writeln!(f, "{} ({x0},{y0})->({x1},{y1}) {}", s.letter, s.dir)?;
        }
        Ok(())
    }
}

/// Letters outside `{i, i', i+1, (i+1)'}` are skipped. Priming a first
/// occurrence never changes the walk, so any representative may be passed.
pub fn lattice_walk(letters: &[Letter], i: u8) -> Walk {
    let mut at = (0, 0);
    let mut steps = Vec::new();
    for (position, &letter) in letters.iter().enumerate() {
        if let Some(rel) = Rel::of(letter, i) {
            let dir = Dir::of(rel, at);
            let to = dir.step(at);
            steps.push(Step { position, letter, from: at, to, dir });
            at = to;
        }
    }
    Walk { index: i, steps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{RawWord, ShiftedTableau};

    #[test]
    fn walk_from_figure() {
        let w = RawWord::parse(2, "211'12'22'1'1'").unwrap();
        let walk = lattice_walk(w.letters(), 1);
        assert_eq!(walk.endpoint(), (3, 2));
        let dirs: String = walk.steps.iter().map(|s| s.dir.to_string()).collect();
        assert_eq!(dirs, "NEESNNWEE");
    }

    #[test]
    fn walk_of_tableau_row_word() {
        let t = ShiftedTableau::parse(3, "1 1 1 1 1 1 3 3 / 2 2 2 3 / 3 3").unwrap();
        assert_eq!(lattice_walk(t.reading_word().letters(), 2).endpoint(), (1, 3));
    }

    #[test]
    fn trivial_walks() {
        assert_eq!(lattice_walk(&[], 1).endpoint(), (0, 0));
        let w = RawWord::parse(3, "33").unwrap();
        assert!(lattice_walk(w.letters(), 1).steps.is_empty());
    }

    #[test]
    fn dump_format() {
        let w = RawWord::parse(2, "12'").unwrap();
        assert_eq!(lattice_walk(w.letters(), 1).to_string(), "1 (0,0)->(1,0) E\n2' (1,0)->(1,1) N\n");
    }
}

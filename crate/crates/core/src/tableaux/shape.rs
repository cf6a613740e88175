use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] > w[1]);
        if ok {
            Ok(StrictPartition(parts))
        } else {
            Err(Error::NotStrict(parts))
        }
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    /// Drops trailing zeros, then validates.
    pub fn from_weight(weight: &[u32]) -> Result<Self> {
        let mut parts = weight.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        StrictPartition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn part(&self, row: usize) -> u32 {
        self.0.get(row).copied().unwrap_or(0)
    }

    /// All strict partitions of `size`, largest parts first.
    pub fn of_size(size: u32) -> Vec<StrictPartition> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
            if rest == 0 {
                out.push(StrictPartition(cur.clone()));
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, &mut Vec::new(), &mut out);
        out
    }

    /// All strict partitions of size at most `max_size`, by size.
    pub fn up_to(max_size: u32) -> Vec<StrictPartition> {
        (0..=max_size).flat_map(StrictPartition::of_size).collect()
    }

    /// Strict partitions contained row-wise in `self`, including the empty one.
    pub fn contained(&self) -> Vec<StrictPartition> {
        fn go(outer: &[u32], row: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
            out.push(StrictPartition(cur.clone()));
            if row >= outer.len() {
                return;
            }
            for p in 1..=outer[row].min(max) {
                cur.push(p);
                go(outer, row + 1, p - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, 0, u32::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl TryFrom<Vec<u32>> for StrictPartition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        StrictPartition::new(parts)
    }
}

impl From<StrictPartition> for Vec<u32> {
    fn from(p: StrictPartition) -> Self {
        p.0
    }
}

impl fmt::Display for StrictPartition {
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

/// A cell as (row, column), both 1-based. Row `r` of a shifted diagram starts at column `r`.
pub type Cell = (usize, usize);

/// A shifted skew diagram `outer / inner`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewShape {
    outer: StrictPartition,
    inner: StrictPartition,
    /// Cells in reading order: rows bottom to top, left to right.
    cells: Vec<Cell>,
    /// Reading-order index of the first cell of each row.
    row_start: Vec<usize>,
}

impl SkewShape {
    pub fn new(outer: StrictPartition, inner: StrictPartition) -> Result<Self> {
        let contained = inner.len() <= outer.len()
            && inner.parts().iter().zip(outer.parts()).all(|(i, o)| i <= o);
        if !contained {
            return Err(Error::NotContained {
                outer: outer.parts().to_vec(),
                inner: inner.parts().to_vec(),
            });
        }
        let mut cells = Vec::new();
        let mut row_start = vec![0; outer.len()];
        for r in (1..=outer.len()).rev() {
            row_start[r - 1] = cells.len();
            let lo = r + inner.part(r - 1) as usize;
            let hi = r + outer.part(r - 1) as usize;
            cells.extend((lo..hi).map(|c| (r, c)));
        }
        Ok(SkewShape { outer, inner, cells, row_start })
    }

    pub fn straight(outer: StrictPartition) -> Self {
        SkewShape::new(outer, StrictPartition::empty()).expect("empty inner shape always fits")
    }

    pub fn from_parts(outer: &[u32], inner: &[u32]) -> Result<Self> {
        SkewShape::new(StrictPartition::new(outer.to_vec())?, StrictPartition::new(inner.to_vec())?)
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Index of a cell in reading order.
    pub fn position(&self, (r, c): Cell) -> Option<usize> {
        if r == 0 || r > self.outer.len() {
            return None;
        }
        let lo = r + self.inner.part(r - 1) as usize;
        let hi = r + self.outer.part(r - 1) as usize;
        (lo..hi).contains(&c).then(|| self.row_start[r - 1] + (c - lo))
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.position(cell).is_some()
    }

    /// Cells of row `r`, left to right.
    pub fn row_cells(&self, r: usize) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied().filter(move |&(row, _)| row == r)
    }

    /// All skew shapes `outer / inner` with `|outer| <= max_size`.
    pub fn all_up_to(max_size: u32) -> Vec<SkewShape> {
        StrictPartition::up_to(max_size)
            .into_iter()
            .flat_map(|outer| {
                outer
                    .contained()
                    .into_iter()
                    .map(move |inner| SkewShape::new(outer.clone(), inner).unwrap())
            })
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<Cell>) -> Vec<Cell> {
        v.sort();
        v
    }

    #[test]
    fn straight_cells() {
        let s = SkewShape::from_parts(&[2, 1], &[]).unwrap();
        assert_eq!(sorted(s.cells().to_vec()), vec![(1, 1), (1, 2), (2, 2)]);
        // reading order starts at the bottom row
        assert_eq!(s.cells()[0], (2, 2));
        for (k, &cell) in s.cells().iter().enumerate() {
            assert_eq!(s.position(cell), Some(k));
        }
        assert_eq!(s.position((2, 1)), None);
    }

    #[test]
    fn skew_cells() {
        let s = SkewShape::from_parts(&[3, 1], &[2]).unwrap();
        assert_eq!(sorted(s.cells().to_vec()), vec![(1, 3), (2, 2)]);
        assert_eq!(s.size(), 4 - 2);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert_eq!(StrictPartition::new(vec![5, 3, 3]), Err(Error::NotStrict(vec![5, 3, 3])));
        assert!(matches!(
            SkewShape::from_parts(&[3, 1], &[2, 1, 0]),
            Err(Error::NotStrict(_))
        ));
        assert!(matches!(SkewShape::from_parts(&[3], &[2, 1]), Err(Error::NotContained { .. })));
        assert!(matches!(SkewShape::from_parts(&[3, 1], &[4]), Err(Error::NotContained { .. })));
    }

    #[test]
    fn empty_shape() {
        let s = SkewShape::from_parts(&[], &[]).unwrap();
        assert_eq!(s.size(), 0);
    }

    #[test]
    fn strict_partition_counts() {
        // number of strict partitions of 0..=8
        let counts: Vec<usize> = (0..=8).map(|k| StrictPartition::of_size(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 2, 3, 4, 5, 6]);
        let inside = StrictPartition::new(vec![3, 1]).unwrap().contained();
        let shown: Vec<String> = inside.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["()", "(1)", "(2)", "(2,1)", "(3)", "(3,1)"]);
    }
}

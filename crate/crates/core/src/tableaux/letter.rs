use std::cmp::Ordering;
use std::fmt;

/// A letter of the marked alphabet `1' < 1 < 2' < 2 < ...`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    value: u8,
    primed: bool,
}

impl Letter {
    pub const fn new(value: u8, primed: bool) -> Self {
        Letter { value, primed }
    }

    pub const fn unprimed(value: u8) -> Self {
        Letter { value, primed: false }
    }

    pub const fn primed(value: u8) -> Self {
        Letter { value, primed: true }
    }

    #[inline]
    pub fn value(self) -> u8 {
        self.value
    }

    #[inline]
    pub fn is_primed(self) -> bool {
        self.primed
    }

    pub fn with_prime(self, primed: bool) -> Self {
        Letter { primed, ..self }
    }

    pub fn toggled(self) -> Self {
        Letter { primed: !self.primed, ..self }
    }

    /// Position in the total order, with `1'` at 0.
    #[inline]
    pub fn rank(self) -> u32 {
        2 * (self.value as u32 - 1) + u32::from(!self.primed)
    }

    /// All `2n` letters over an alphabet of size `n`, in increasing order.
    pub fn alphabet(n: u8) -> impl Iterator<Item = Letter> {
        (1..=n).flat_map(|v| [Letter::primed(v), Letter::unprimed(v)])
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.value, !self.primed).cmp(&(other.value, !other.primed))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primed {
            write!(f, "{}'", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_interleaves_primes() {
        let all: Vec<Letter> = Letter::alphabet(3).collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert!(Letter::primed(1) < Letter::unprimed(1));
        assert!(Letter::unprimed(1) < Letter::primed(2));
        assert_eq!(Letter::primed(2).rank(), 2);
    }

    #[test]
    fn display() {
        assert_eq!(Letter::primed(12).to_string(), "12'");
        assert_eq!(Letter::unprimed(3).to_string(), "3");
    }
}

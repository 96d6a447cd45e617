//! Bitset-backed subsets of a fixed finite carrier `{0, .., n-1}`.

use std::fmt;

/// A subset of the carrier of a fixed algebra. The carrier size `n` travels
/// with the set so that unions, complements and comparisons are well defined.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    n: usize,
    words: Vec<u64>,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

impl ElementSet {
    pub fn empty(n: usize) -> Self {
        ElementSet { n, words: vec![0; word_count(n)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for e in 0..n {
            s.insert(e);
        }
        s
    }

    pub fn singleton(n: usize, e: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(e);
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, iter: I) -> Self {
        let mut s = Self::empty(n);
        for e in iter {
            s.insert(e);
        }
        s
    }

    /// Carrier size (not the cardinality of the subset).
    pub fn carrier(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, e: usize) {
        assert!(e < self.n, "element {e} out of range 0..{}", self.n);
        self.words[e / 64] |= 1 << (e % 64);
    }

    pub fn remove(&mut self, e: usize) {
        assert!(e < self.n, "element {e} out of range 0..{}", self.n);
        self.words[e / 64] &= !(1 << (e % 64));
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.n && self.words[e / 64] >> (e % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&e| self.contains(e))
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersect(&self, other: &ElementSet) -> ElementSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        assert_eq!(self.n, other.n, "carrier mismatch");
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    fn zip_with(&self, other: &ElementSet, f: impl Fn(u64, u64) -> u64) -> ElementSet {
        assert_eq!(self.n, other.n, "carrier mismatch");
        let words = self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect();
        let mut s = ElementSet { n: self.n, words };
        s.trim();
        s
    }

    fn trim(&mut self) {
        let tail = self.n % 64;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    /// Numeric key of the bit pattern, used for canonical ordering of sets
    /// and of exocenter maps by image mask.
    pub fn mask_key(&self) -> Vec<u64> {
        let mut rev = self.words.clone();
        rev.reverse();
        rev
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.mask_key()).cmp(&(other.n, other.mask_key()))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = ElementSet::empty(70);
        s.insert(0);
        s.insert(69);
        assert!(s.contains(0) && s.contains(69) && !s.contains(33));
        assert_eq!(s.len(), 2);
        let t = ElementSet::from_iter(70, [0, 33]);
        assert_eq!(s.intersect(&t), ElementSet::singleton(70, 0));
        assert_eq!(s.union(&t).len(), 3);
        assert!(ElementSet::empty(70).is_subset(&s));
        assert!(!s.is_subset(&t));
    }

    #[test]
    fn full_set_trims_tail_bits() {
        let s = ElementSet::full(65);
        assert_eq!(s.len(), 65);
        assert_eq!(s.difference(&s).len(), 0);
    }
}

//! Fixed-width bit-indexed vertex sets.
//!
//! A [`VertexSet`] holds a subset of `0..MAX_VERTICES`. Four 64-bit words give
//! a single code path for the whole supported range: the hot sweeps only touch
//! the first word, while construction graphs (dozens of small components) fit
//! comfortably below the cap.

use std::fmt;

const WORDS: usize = 4;

/// Largest vertex count supported anywhere in this crate.
pub const MAX_VERTICES: usize = WORDS * 64;

/// A subset of `0..MAX_VERTICES`, one bit per vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { words: [0; WORDS] };

    /// The set `{0, 1, ..., n-1}`.
    pub fn all_below(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds cap {MAX_VERTICES}");
        let mut words = [0u64; WORDS];
        let (full, rem) = (n / 64, n % 64);
        for w in words.iter_mut().take(full) {
            *w = u64::MAX;
        }
        if rem > 0 {
            words[full] = (1u64 << rem) - 1;
        }
        VertexSet { words }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(v);
        s
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_VERTICES, "vertex {v} exceeds cap {MAX_VERTICES}");
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < MAX_VERTICES {
            self.words[v / 64] &= !(1u64 << (v % 64));
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.words[v / 64] & (1u64 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words == [0; WORDS]
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut words = self.words;
        for (a, b) in words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
        VertexSet { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut words = self.words;
        for (a, b) in words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
        VertexSet { words }
    }

    /// Set difference `self \ other`.
    pub fn difference(&self, other: &Self) -> Self {
        let mut words = self.words;
        for (a, b) in words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
        VertexSet { words }
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, w) in self.words.iter().enumerate() {
            if *w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// All elements shifted up by `offset` (used when juxtaposing graphs).
    pub fn shifted_up(&self, offset: usize) -> Self {
        let mut out = Self::EMPTY;
        for v in self.iter() {
            out.insert(v + offset);
        }
        out
    }

    /// Iterates elements in ascending order.
    pub fn iter(&self) -> Iter {
        Iter { set: *self }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

pub struct Iter {
    set: VertexSet,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let v = self.set.first()?;
        self.set.remove(v);
        Some(v)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_remove() {
        let mut s = VertexSet::EMPTY;
        assert!(s.is_empty());
        s.insert(0);
        s.insert(63);
        s.insert(64);
        s.insert(255);
        assert_eq!(s.len(), 4);
        assert!(s.contains(64));
        assert!(!s.contains(65));
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.to_vec(), vec![0, 63, 255]);
    }

    #[test]
    fn all_below_matches_len() {
        for n in [0, 1, 63, 64, 65, 128, 200, 256] {
            let s = VertexSet::all_below(n);
            assert_eq!(s.len(), n);
            if n > 0 {
                assert!(s.contains(n - 1));
            }
            assert!(!s.contains(n));
        }
    }

    #[test]
    fn set_algebra() {
        let a: VertexSet = [1, 2, 3, 70].into_iter().collect();
        let b: VertexSet = [2, 70, 100].into_iter().collect();
        assert_eq!(a.intersection(&b).to_vec(), vec![2, 70]);
        assert_eq!(a.union(&b).len(), 5);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 3]);
        assert!(!a.is_disjoint(&b));
        assert!(a.intersection(&b).is_subset_of(&a));
        assert_eq!(a.first(), Some(1));
        assert_eq!(VertexSet::EMPTY.first(), None);
    }

    #[test]
    fn shift_crosses_word_boundary() {
        let a: VertexSet = [0, 5, 60].into_iter().collect();
        assert_eq!(a.shifted_up(10).to_vec(), vec![10, 15, 70]);
    }

    #[test]
    fn display_form() {
        let a: VertexSet = [0, 2].into_iter().collect();
        assert_eq!(format!("{a}"), "{0, 2}");
    }
}

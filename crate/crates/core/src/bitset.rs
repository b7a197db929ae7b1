//! Fixed-width vertex sets.
//!
//! Every set is `MAX_VERTICES` bits wide, so intersections and unions are a
//! handful of word operations and the type is `Copy`.

use core::fmt;
use core::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

const WORDS: usize = 2;

/// Largest vertex count a [`crate::Graph`] can hold.
pub const MAX_VERTICES: usize = WORDS * 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { words: [0; WORDS] };

    #[inline]
    pub const fn new() -> Self {
        Self::EMPTY
    }

    /// The set `{0, …, n-1}`. Panics if `n > MAX_VERTICES`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex set width exceeded");
        let mut words = [0u64; WORDS];
        for (i, w) in words.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = u64::MAX;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        VertexSet { words }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(v);
        s
    }

    /// Builds a set from the low bits of a mask (handy for exhaustive loops).
    #[inline]
    pub fn from_mask(mask: u64) -> Self {
        let mut words = [0u64; WORDS];
        words[0] = mask;
        VertexSet { words }
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.words[v >> 6] & (1u64 << (v & 63)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    /// Smallest element.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Largest element.
    #[inline]
    pub fn last(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate().rev() {
            if w != 0 {
                return Some(i * 64 + 63 - w.leading_zeros() as usize);
            }
        }
        None
    }

    /// Elements strictly greater than `v`.
    pub fn above(&self, v: usize) -> VertexSet {
        if v + 1 >= MAX_VERTICES {
            return Self::EMPTY;
        }
        *self & !VertexSet::full(v + 1)
    }

    #[inline]
    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            idx: 0,
        }
    }

    /// Low 64 bits; exact whenever every element is below 64.
    #[inline]
    pub fn low_word(&self) -> u64 {
        self.words[0]
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter {
    words: [u64; WORDS],
    idx: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.idx < WORDS {
            let w = &mut self.words[self.idx];
            if *w != 0 {
                let bit = w.trailing_zeros() as usize;
                *w &= *w - 1;
                return Some(self.idx * 64 + bit);
            }
            self.idx += 1;
        }
        None
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
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

macro_rules! wordwise {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident, $op:tt) => {
        impl $trait for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $method(mut self, rhs: VertexSet) -> VertexSet {
                for (a, b) in self.words.iter_mut().zip(rhs.words.iter()) {
                    *a = *a $op *b;
                }
                self
            }
        }

        impl $assign_trait for VertexSet {
            #[inline]
            fn $assign_method(&mut self, rhs: VertexSet) {
                for (a, b) in self.words.iter_mut().zip(rhs.words.iter()) {
                    *a = *a $op *b;
                }
            }
        }
    };
}

wordwise!(BitAnd, bitand, BitAndAssign, bitand_assign, &);
wordwise!(BitOr, bitor, BitOrAssign, bitor_assign, |);

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(mut self, rhs: VertexSet) -> VertexSet {
        for (a, b) in self.words.iter_mut().zip(rhs.words.iter()) {
            *a &= !*b;
        }
        self
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(mut self) -> VertexSet {
        for w in self.words.iter_mut() {
            *w = !*w;
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn iteration_is_ascending_across_words() {
        let s: VertexSet = [127, 0, 64, 63, 5].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), [0, 5, 63, 64, 127]);
        assert_eq!(s.len(), 5);
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.last(), Some(127));
    }

    #[test]
    fn full_and_above() {
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(MAX_VERTICES).len(), MAX_VERTICES);
        let s = VertexSet::full(70);
        assert_eq!(s.above(63).iter().collect::<Vec<_>>(), [64, 65, 66, 67, 68, 69]);
        assert!(s.above(MAX_VERTICES - 1).is_empty());
    }

    #[test]
    fn set_algebra() {
        let a: VertexSet = [1, 2, 3, 100].into_iter().collect();
        let b: VertexSet = [2, 3, 4].into_iter().collect();
        assert_eq!((a & b).iter().collect::<Vec<_>>(), [2, 3]);
        assert_eq!((a - b).iter().collect::<Vec<_>>(), [1, 100]);
        assert_eq!((a | b).len(), 5);
        assert!((a & b).is_subset(&a));
        assert!(!a.is_subset(&b));
        assert!(a.intersects(&b));
    }
}

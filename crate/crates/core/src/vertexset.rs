//! Subsets of the vertices of a fixed graph.

use std::cmp::Ordering;
use std::fmt;

use crate::bits::{BitBlock, BitIter, Block256};

/// Largest supported vertex count. Sets are stored as 256-bit masks so that
/// every graph at desk scale fits; graphs with at most 64 vertices run the
/// search on a single word.
pub const MAX_VERTICES: usize = 256;

/// A subset of `0..n`, bit-indexed.
///
/// All set algebra is exact and allocation-free. Two sets may only be
/// combined when they share the same ambient vertex count.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: [u64; 4],
    n: u16,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        VertexSet {
            words: [0; 4],
            n: n as u16,
        }
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        VertexSet {
            words: Block256::low_mask(n as u32).0,
            n: n as u16,
        }
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(n: usize, ids: I) -> Self {
        let mut s = VertexSet::empty(n);
        for v in ids {
            s.insert(v);
        }
        s
    }

    pub(crate) fn from_words(n: usize, words: [u64; 4]) -> Self {
        debug_assert!(Block256(words).is_subset(Block256::low_mask(n as u32)));
        VertexSet { words, n: n as u16 }
    }

    pub(crate) fn words(&self) -> [u64; 4] {
        self.words
    }

    #[inline]
    fn block(&self) -> Block256 {
        Block256(self.words)
    }

    /// Ambient vertex count.
    #[inline]
    pub fn ambient(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.block().count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.block().is_zero()
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        assert!(v < self.n as usize, "vertex {v} out of range");
        self.block().contains_bit(v as u32)
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n as usize, "vertex {v} out of range");
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n as usize, "vertex {v} out of range");
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    fn check_same_ambient(&self, other: &VertexSet) {
        assert_eq!(
            self.n, other.n,
            "vertex sets of different graphs cannot be combined"
        );
    }

    #[must_use]
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.check_same_ambient(other);
        VertexSet {
            words: self.block().or(other.block()).0,
            n: self.n,
        }
    }

    #[must_use]
    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.check_same_ambient(other);
        VertexSet {
            words: self.block().and(other.block()).0,
            n: self.n,
        }
    }

    /// Set difference `self \ other`.
    #[must_use]
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.check_same_ambient(other);
        VertexSet {
            words: self.block().diff(other.block()).0,
            n: self.n,
        }
    }

    /// Complement within the ambient vertex set.
    #[must_use]
    pub fn complement(&self) -> VertexSet {
        VertexSet {
            words: Block256::low_mask(self.n as u32).diff(self.block()).0,
            n: self.n,
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.check_same_ambient(other);
        self.block().is_subset(other.block())
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.block()).map(|i| i as usize)
    }

    /// Member ids in ascending order.
    pub fn ids(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min_id(&self) -> Option<usize> {
        let tz = self.block().trailing_zeros();
        if tz == 256 {
            None
        } else {
            Some(tz as usize)
        }
    }
}

impl Ord for VertexSet {
    /// Numeric order of the bitmask (vertex 0 is the least significant bit),
    /// the canonical tie-break everywhere in the solver.
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .iter()
            .rev()
            .cmp(other.words.iter().rev())
            .then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
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

//! Fixed-width bit blocks backing vertex sets and the subset search.
//!
//! The solver is generic over [`BitBlock`] so that graphs with at most 64
//! vertices run on a single machine word while larger graphs (up to 256
//! vertices) fall back to a four-word block.

use std::fmt;

/// Integer-style bit storage. Implementations must behave like an unsigned
/// integer of `CAPACITY` bits: the combination enumerator relies on two's
/// complement wrap-around.
pub(crate) trait BitBlock: Copy + Eq + fmt::Debug + Send + Sync + 'static {
    const CAPACITY: u32;

    fn zero() -> Self;
    fn all_ones() -> Self;
    fn bit(i: u32) -> Self;
    /// Mask with the `k` lowest bits set (`k <= CAPACITY`).
    fn low_mask(k: u32) -> Self;
    fn from_words(words: [u64; 4]) -> Self;
    fn to_words(self) -> [u64; 4];

    fn and(self, o: Self) -> Self;
    fn or(self, o: Self) -> Self;
    fn xor(self, o: Self) -> Self;
    fn not(self) -> Self;
    fn wrapping_add(self, o: Self) -> Self;
    fn wrapping_neg(self) -> Self;
    fn shr(self, k: u32) -> Self;

    fn count_ones(self) -> u32;
    fn trailing_zeros(self) -> u32;

    #[inline]
    fn is_zero(self) -> bool {
        self == Self::zero()
    }
    /// `self & !o`.
    #[inline]
    fn diff(self, o: Self) -> Self {
        self.and(o.not())
    }
    #[inline]
    fn contains_bit(self, i: u32) -> bool {
        !self.and(Self::bit(i)).is_zero()
    }
    /// Clears the lowest set bit (`x & (x - 1)`).
    #[inline]
    fn clear_lowest(self) -> Self {
        self.and(self.wrapping_add(Self::all_ones()))
    }
    #[inline]
    fn is_subset(self, o: Self) -> bool {
        self.diff(o).is_zero()
    }
}

impl BitBlock for u64 {
    const CAPACITY: u32 = 64;

    #[inline]
    fn zero() -> Self {
        0
    }
    #[inline]
    fn all_ones() -> Self {
        u64::MAX
    }
    #[inline]
    fn bit(i: u32) -> Self {
        1u64 << i
    }
    #[inline]
    fn low_mask(k: u32) -> Self {
        if k >= 64 {
            u64::MAX
        } else {
            (1u64 << k) - 1
        }
    }
    #[inline]
    fn from_words(words: [u64; 4]) -> Self {
        debug_assert!(words[1] == 0 && words[2] == 0 && words[3] == 0);
        words[0]
    }
    #[inline]
    fn to_words(self) -> [u64; 4] {
        [self, 0, 0, 0]
    }
    #[inline]
    fn and(self, o: Self) -> Self {
        self & o
    }
    #[inline]
    fn or(self, o: Self) -> Self {
        self | o
    }
    #[inline]
    fn xor(self, o: Self) -> Self {
        self ^ o
    }
    #[inline]
    fn not(self) -> Self {
        !self
    }
    #[inline]
    fn wrapping_add(self, o: Self) -> Self {
        u64::wrapping_add(self, o)
    }
    #[inline]
    fn wrapping_neg(self) -> Self {
        u64::wrapping_neg(self)
    }
    #[inline]
    fn shr(self, k: u32) -> Self {
        if k >= 64 {
            0
        } else {
            self >> k
        }
    }
    #[inline]
    fn count_ones(self) -> u32 {
        u64::count_ones(self)
    }
    #[inline]
    fn trailing_zeros(self) -> u32 {
        u64::trailing_zeros(self)
    }
}

/// 256-bit block stored as four little-endian words.
#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) struct Block256(pub [u64; 4]);

impl fmt::Debug for Block256 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Block256({:#018x} {:#018x} {:#018x} {:#018x})",
            self.0[3], self.0[2], self.0[1], self.0[0]
        )
    }
}

impl BitBlock for Block256 {
    const CAPACITY: u32 = 256;

    #[inline]
    fn zero() -> Self {
        Block256([0; 4])
    }
    #[inline]
    fn all_ones() -> Self {
        Block256([u64::MAX; 4])
    }
    #[inline]
    fn bit(i: u32) -> Self {
        debug_assert!(i < 256);
        let mut w = [0u64; 4];
        w[(i / 64) as usize] = 1u64 << (i % 64);
        Block256(w)
    }
    fn low_mask(k: u32) -> Self {
        debug_assert!(k <= 256);
        let mut w = [0u64; 4];
        for (idx, word) in w.iter_mut().enumerate() {
            let base = idx as u32 * 64;
            if k >= base + 64 {
                *word = u64::MAX;
            } else if k > base {
                *word = (1u64 << (k - base)) - 1;
            }
        }
        Block256(w)
    }
    #[inline]
    fn from_words(words: [u64; 4]) -> Self {
        Block256(words)
    }
    #[inline]
    fn to_words(self) -> [u64; 4] {
        self.0
    }
    #[inline]
    fn and(self, o: Self) -> Self {
        let a = self.0;
        let b = o.0;
        Block256([a[0] & b[0], a[1] & b[1], a[2] & b[2], a[3] & b[3]])
    }
    #[inline]
    fn or(self, o: Self) -> Self {
        let a = self.0;
        let b = o.0;
        Block256([a[0] | b[0], a[1] | b[1], a[2] | b[2], a[3] | b[3]])
    }
    #[inline]
    fn xor(self, o: Self) -> Self {
        let a = self.0;
        let b = o.0;
        Block256([a[0] ^ b[0], a[1] ^ b[1], a[2] ^ b[2], a[3] ^ b[3]])
    }
    #[inline]
    fn not(self) -> Self {
        let a = self.0;
        Block256([!a[0], !a[1], !a[2], !a[3]])
    }
    #[inline]
    fn wrapping_add(self, o: Self) -> Self {
        let a = self.0;
        let b = o.0;
        let mut out = [0u64; 4];
        let mut carry = 0u64;
        for i in 0..4 {
            let (s1, c1) = a[i].overflowing_add(b[i]);
            let (s2, c2) = s1.overflowing_add(carry);
            out[i] = s2;
            carry = (c1 as u64) + (c2 as u64);
        }
        Block256(out)
    }
    #[inline]
    fn wrapping_neg(self) -> Self {
        self.not().wrapping_add(Block256::bit(0))
    }
    fn shr(self, k: u32) -> Self {
        if k >= 256 {
            return Self::zero();
        }
        let word_shift = (k / 64) as usize;
        let bit_shift = k % 64;
        let a = self.0;
        let mut out = [0u64; 4];
        for (i, slot) in out.iter_mut().enumerate() {
            let src = i + word_shift;
            if src < 4 {
                *slot = a[src] >> bit_shift;
                if bit_shift > 0 && src + 1 < 4 {
                    *slot |= a[src + 1] << (64 - bit_shift);
                }
            }
        }
        Block256(out)
    }
    #[inline]
    fn count_ones(self) -> u32 {
        let a = self.0;
        a[0].count_ones() + a[1].count_ones() + a[2].count_ones() + a[3].count_ones()
    }
    #[inline]
    fn trailing_zeros(self) -> u32 {
        let a = self.0;
        for (i, w) in a.iter().enumerate() {
            if *w != 0 {
                return i as u32 * 64 + w.trailing_zeros();
            }
        }
        256
    }
}

/// Successor of `x` in the ascending enumeration of masks with a fixed
/// popcount (Gosper's hack). `None` once the enumeration wraps past the
/// block capacity.
#[inline]
pub(crate) fn next_same_popcount<B: BitBlock>(x: B) -> Option<B> {
    if x.is_zero() {
        return None;
    }
    let lowest = x.and(x.wrapping_neg());
    let carried = x.wrapping_add(lowest);
    if carried.is_zero() {
        return None;
    }
    let shifted = x.xor(carried).shr(lowest.trailing_zeros() + 2);
    Some(carried.or(shifted))
}

/// All `k`-element subsets of bit positions `0..n`, in ascending numeric
/// order of their masks.
pub(crate) struct Combinations<B: BitBlock> {
    next: Option<B>,
    universe: B,
}

impl<B: BitBlock> Combinations<B> {
    pub fn new(n: u32, k: u32) -> Self {
        debug_assert!(n <= B::CAPACITY);
        let next = if k > n { None } else { Some(B::low_mask(k)) };
        Combinations {
            next,
            universe: B::low_mask(n),
        }
    }
}

impl<B: BitBlock> Iterator for Combinations<B> {
    type Item = B;

    #[inline]
    fn next(&mut self) -> Option<B> {
        let current = self.next?;
        self.next = next_same_popcount(current).filter(|m| m.is_subset(self.universe));
        Some(current)
    }
}

/// Iterates the set bit positions of a block, lowest first.
pub(crate) struct BitIter<B: BitBlock>(pub B);

impl<B: BitBlock> Iterator for BitIter<B> {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.0.is_zero() {
            None
        } else {
            let i = self.0.trailing_zeros();
            self.0 = self.0.clear_lowest();
            Some(i)
        }
    }
}

/// Closure engine over a fixed adjacency. A black vertex whose neighborhood
/// contains exactly one white vertex turns that vertex black.
pub(crate) struct Kernel<B: BitBlock> {
    pub adj: Vec<B>,
    pub full: B,
}

impl<B: BitBlock> Kernel<B> {
    pub fn new(adj: Vec<B>) -> Self {
        let full = B::low_mask(adj.len() as u32);
        Kernel { adj, full }
    }

    /// One global application of the color-change rule: every vertex forcible
    /// from the frozen input turns black simultaneously.
    #[inline]
    pub fn step(&self, black: B) -> B {
        let mut add = B::zero();
        let mut scan = black;
        while !scan.is_zero() {
            let u = scan.trailing_zeros() as usize;
            scan = scan.clear_lowest();
            let white = self.adj[u].diff(black);
            if white.count_ones() == 1 {
                add = add.or(white);
            }
        }
        black.or(add)
    }

    /// Fixpoint of the color-change rule. Applies forces as they are found
    /// within a sweep; the fixpoint is order-independent.
    pub fn closure(&self, start: B) -> B {
        let mut black = start;
        loop {
            let mut progressed = false;
            let mut scan = black;
            while !scan.is_zero() {
                let u = scan.trailing_zeros() as usize;
                scan = scan.clear_lowest();
                let white = self.adj[u].diff(black);
                if white.count_ones() == 1 {
                    black = black.or(white);
                    progressed = true;
                }
            }
            if !progressed {
                return black;
            }
            if black == self.full {
                return black;
            }
        }
    }

    #[inline]
    pub fn is_zfs(&self, start: B) -> bool {
        self.closure(start) == self.full
    }

    /// Number of global rounds until the fixpoint, whether the fixpoint is
    /// the whole vertex set, and the fixpoint itself.
    pub fn rounds(&self, start: B) -> (usize, bool, B) {
        let mut black = start;
        let mut rounds = 0;
        loop {
            let next = self.step(black);
            if next == black {
                break;
            }
            black = next;
            rounds += 1;
        }
        (rounds, black == self.full, black)
    }
}

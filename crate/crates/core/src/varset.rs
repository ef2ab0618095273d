//! Small index sets over `0..63`, used both for vertex subsets of graphs and
//! for supports of squarefree monomials.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

/// Hard cap on ambient size: supports are single `u64` masks.
pub const MAX_VARS: usize = 63;

/// A subset of `{0, ..., 62}` stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn empty() -> Self {
        VarSet(0)
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_VARS);
        VarSet(1u64 << i)
    }

    pub fn pair(i: usize, j: usize) -> Self {
        Self::singleton(i) | Self::singleton(j)
    }

    /// The full set `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VARS);
        if n == 0 {
            VarSet(0)
        } else {
            VarSet(u64::MAX >> (64 - n))
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1u64 << i) != 0
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        debug_assert!(i < MAX_VARS);
        VarSet(self.0 | (1u64 << i))
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        VarSet(self.0 & !(1u64 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min_elem(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Complement inside `{0, ..., n-1}`.
    #[must_use]
    pub fn complement(self, n: usize) -> Self {
        VarSet(!self.0) & Self::full(n)
    }

    pub fn iter(self) -> VarIter {
        VarIter(self.0)
    }

    /// All submasks of `self`, including the empty set (order unspecified).
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, cur: self.0, done: false }
    }

    /// Lexicographic order on the ascending index sequences, with a proper
    /// prefix sorting first.
    pub fn cmp_lex(a: VarSet, b: VarSet) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        let diff = a.0 ^ b.0;
        let low = diff.trailing_zeros();
        let holder_is_a = a.0 >> low & 1 == 1;
        let other = if holder_is_a { b.0 } else { a.0 };
        if other >> low >> 1 == 0 {
            // the other set ran out: it is a proper prefix of the holder
            if holder_is_a {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if holder_is_a {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Canonical order used for generator and cover lists: cardinality first,
    /// then lexicographic on index sequences.
    pub fn cmp_canonical(a: VarSet, b: VarSet) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| Self::cmp_lex(a, b))
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VarSet::empty();
        for i in iter {
            s = s.with(i);
        }
        s
    }
}

impl BitOr for VarSet {
    type Output = VarSet;
    fn bitor(self, rhs: VarSet) -> VarSet {
        VarSet(self.0 | rhs.0)
    }
}

impl BitAnd for VarSet {
    type Output = VarSet;
    fn bitand(self, rhs: VarSet) -> VarSet {
        VarSet(self.0 & rhs.0)
    }
}

impl BitXor for VarSet {
    type Output = VarSet;
    fn bitxor(self, rhs: VarSet) -> VarSet {
        VarSet(self.0 ^ rhs.0)
    }
}

impl Sub for VarSet {
    type Output = VarSet;
    fn sub(self, rhs: VarSet) -> VarSet {
        VarSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

pub struct VarIter(u64);

impl Iterator for VarIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

pub struct Subsets {
    mask: u64,
    cur: u64,
    done: bool,
}

impl Iterator for Subsets {
    type Item = VarSet;
    fn next(&mut self) -> Option<VarSet> {
        if self.done {
            return None;
        }
        let out = VarSet(self.cur);
        if self.cur == 0 {
            self.done = true;
        } else {
            self.cur = (self.cur - 1) & self.mask;
        }
        Some(out)
    }
}

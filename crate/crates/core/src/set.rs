//! Vertex sets as single-word bit masks.
//!
//! Every set of vertices that the library manipulates (separators,
//! components, neighborhoods) fits in one `u64`, which is why the graph
//! order is capped at 64.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Sub, SubAssign};

/// A set of vertices, stored as a 64-bit mask. Vertex `i` is a member iff
/// bit `i` is set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    /// The set `{0, 1, ..., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        self.0 & (1 << v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates members in increasing order.
    #[inline]
    pub fn iter(self) -> Members {
        Members(self.0)
    }
}

/// Iterator over the members of a [`VertexSet`], ascending.
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitxor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 ^ rhs.0)
    }
}

/// Set difference.
impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_membership() {
        let s: VertexSet = [0, 2, 5].into_iter().collect();
        assert!(s.contains(0) && s.contains(2) && s.contains(5));
        assert!(!s.contains(1) && !s.contains(63));
        assert_eq!(s.len(), 3);
        assert_eq!(s.min(), Some(0));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
    }

    #[test]
    fn set_algebra() {
        let a: VertexSet = [0, 1, 2].into_iter().collect();
        let b: VertexSet = [1, 2, 3].into_iter().collect();
        assert_eq!((a | b).len(), 4);
        assert_eq!((a & b).iter().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!((a - b).iter().collect::<Vec<_>>(), vec![0]);
        assert!((a & b).is_subset_of(a));
        assert!(VertexSet::EMPTY.is_subset_of(a));
        assert!(!a.is_subset_of(b));
        assert!(a.is_disjoint(VertexSet::singleton(7)));
    }

    #[test]
    fn full_edge_cases() {
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(1).len(), 1);
        assert_eq!(VertexSet::full(64).len(), 64);
    }

    #[test]
    fn display_format() {
        let s: VertexSet = [1, 4].into_iter().collect();
        assert_eq!(format!("{s}"), "{1,4}");
        assert_eq!(format!("{}", VertexSet::EMPTY), "{}");
    }
}

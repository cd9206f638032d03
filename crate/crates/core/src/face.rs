use std::cmp::Ordering;
use std::fmt;

/// A subset of a complex's ground set, stored as a bit mask over vertex
/// *positions* (bit `i` is the `i`-th element of the ground set, in label order).
///
/// Positions are local to a complex; use
/// [`SimplicialComplex::face_labels`](crate::SimplicialComplex::face_labels) to
/// get the 1-based vertex labels back.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceSet(u32);

impl FaceSet {
    pub const EMPTY: FaceSet = FaceSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        FaceSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn singleton(pos: usize) -> Self {
        FaceSet(1 << pos)
    }

    /// The set `{0, .., n-1}` of the first `n` positions.
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            FaceSet(u32::MAX)
        } else {
            FaceSet((1u32 << n) - 1)
        }
    }

    pub fn from_positions<I: IntoIterator<Item = usize>>(positions: I) -> Self {
        FaceSet(positions.into_iter().fold(0, |acc, p| acc | (1 << p)))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, pos: usize) -> bool {
        self.0 & (1 << pos) != 0
    }

    pub const fn is_subset(self, other: FaceSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: FaceSet) -> FaceSet {
        FaceSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: FaceSet) -> FaceSet {
        FaceSet(self.0 & other.0)
    }

    pub const fn difference(self, other: FaceSet) -> FaceSet {
        FaceSet(self.0 & !other.0)
    }

    pub fn with(self, pos: usize) -> FaceSet {
        FaceSet(self.0 | (1 << pos))
    }

    pub fn without(self, pos: usize) -> FaceSet {
        FaceSet(self.0 & !(1 << pos))
    }

    /// Smallest position in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Positions in increasing order.
    pub fn iter(self) -> Positions {
        Positions(self.0)
    }

    /// All subsets of `self`, in decreasing numeric order, ending with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(self.0),
        }
    }

    /// Order by cardinality, then lexicographically on the sorted position lists.
    pub fn graded_cmp(&self, other: &FaceSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }

    /// Re-index `self` relative to `mask`: the `j`-th element of `mask` becomes
    /// position `j`. Elements of `self` outside `mask` are dropped.
    pub fn compress(self, mask: FaceSet) -> FaceSet {
        let mut out = 0u32;
        for (j, p) in mask.iter().enumerate() {
            if self.contains(p) {
                out |= 1 << j;
            }
        }
        FaceSet(out)
    }

    /// Inverse of [`FaceSet::compress`]: position `j` goes to the `j`-th element of `mask`.
    pub fn expand(self, mask: FaceSet) -> FaceSet {
        let mut out = 0u32;
        for (j, p) in mask.iter().enumerate() {
            if self.contains(j) {
                out |= 1 << p;
            }
        }
        FaceSet(out)
    }
}

impl fmt::Debug for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Positions(u32);

impl Iterator for Positions {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Positions {}

pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = FaceSet;

    fn next(&mut self) -> Option<FaceSet> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & self.mask)
        };
        Some(FaceSet(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_order() {
        let a = FaceSet::from_positions([0, 1]);
        let b = FaceSet::from_positions([0, 2]);
        let c = FaceSet::from_positions([3]);
        let mut v = vec![b, a, c];
        v.sort_by(FaceSet::graded_cmp);
        assert_eq!(v, vec![c, a, b]);
    }

    #[test]
    fn subsets_count() {
        let s = FaceSet::from_positions([1, 4, 7]);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|t| t.is_subset(s)));
        assert_eq!(*all.last().unwrap(), FaceSet::EMPTY);
    }

    #[test]
    fn compress_expand() {
        let mask = FaceSet::from_positions([1, 3, 4]);
        let x = FaceSet::from_positions([1, 4, 5]);
        let c = x.compress(mask);
        assert_eq!(c, FaceSet::from_positions([0, 2]));
        assert_eq!(c.expand(mask), FaceSet::from_positions([1, 4]));
    }
}

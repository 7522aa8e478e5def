use std::fmt;

/// A subset of the coordinate positions `0..n`, stored as a bitmask.
///
/// Positions are 0-based internally; [`SupportSet::one_based`] gives the
/// 1-based listing used in reports.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SupportSet(u64);

impl SupportSet {
    pub const EMPTY: SupportSet = SupportSet(0);

    pub fn from_bits(bits: u64) -> SupportSet {
        SupportSet(bits)
    }

    pub fn full(n: usize) -> SupportSet {
        if n >= 64 {
            SupportSet(u64::MAX)
        } else {
            SupportSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> SupportSet {
        SupportSet(indices.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    /// Builds a set from 1-based positions.
    pub fn from_one_based<I: IntoIterator<Item = usize>>(indices: I) -> SupportSet {
        SupportSet::from_indices(indices.into_iter().map(|i| i - 1))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn complement(self, n: usize) -> SupportSet {
        SupportSet(!self.0 & SupportSet::full(n).0)
    }

    pub fn union(self, other: SupportSet) -> SupportSet {
        SupportSet(self.0 | other.0)
    }

    pub fn intersection(self, other: SupportSet) -> SupportSet {
        SupportSet(self.0 & other.0)
    }

    pub fn difference(self, other: SupportSet) -> SupportSet {
        SupportSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: SupportSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: SupportSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |i| bits >> i & 1 == 1)
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Debug for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (j, i) in self.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = SupportSet::from_one_based([1, 3, 5]);
        let b = SupportSet::from_indices([2, 3]);
        assert_eq!(a.indices(), vec![0, 2, 4]);
        assert_eq!(a.union(b).one_based(), vec![1, 3, 4, 5]);
        assert_eq!(a.intersection(b).one_based(), vec![3]);
        assert_eq!(a.complement(6).one_based(), vec![2, 4, 6]);
        assert!(SupportSet::EMPTY.is_subset(a));
        assert_eq!(SupportSet::full(64).len(), 64);
        assert_eq!(format!("{a:?}"), "{1,3,5}");
    }
}

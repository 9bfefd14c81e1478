use std::fmt;

use serde::{Serialize, Serializer};

/// A subset of the generator index set `{1, …, rank}`.
///
/// Stored as a bitmask; bit `i - 1` is set when generator `i` belongs to the
/// set. Ranks up to 16 fit, far beyond anything the group engine accepts.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct IndexSet(u16);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    /// Bitmask constructor; bit `i - 1` stands for generator `i`.
    pub const fn from_bits(bits: u16) -> Self {
        IndexSet(bits)
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    /// `{1, …, rank}`.
    pub fn full(rank: usize) -> Self {
        debug_assert!(rank <= 16);
        if rank == 16 {
            IndexSet(u16::MAX)
        } else {
            IndexSet((1u16 << rank) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!((1..=16).contains(&i));
        IndexSet(1 << (i - 1))
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=16).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= IndexSet::singleton(i).0;
    }

    pub fn union(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 & other.0)
    }

    pub fn difference(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: IndexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: IndexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Members in increasing order, 1-based.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..=16).filter(move |&i| self.contains(i))
    }

    /// Every subset of `self`, starting with the empty set.
    pub fn subsets(self) -> impl Iterator<Item = IndexSet> {
        let mask = self.0 as u32;
        let mut sub: Option<u32> = Some(0);
        std::iter::from_fn(move || {
            let current = sub?;
            // Standard submask walk: next = (current - mask) & mask.
            let next = (current.wrapping_sub(mask)) & mask;
            sub = if next == 0 { None } else { Some(next) };
            Some(IndexSet(current as u16))
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut set = IndexSet::EMPTY;
        for i in iter {
            set.insert(i);
        }
        set
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for IndexSet {
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

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_of_three_element_set() {
        let s: IndexSet = [1, 3, 4].into_iter().collect();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(subs[0], IndexSet::EMPTY);
    }

    #[test]
    fn set_algebra() {
        let a: IndexSet = [1, 2].into_iter().collect();
        let b: IndexSet = [2, 3].into_iter().collect();
        assert_eq!(a.intersection(b).to_vec(), vec![2]);
        assert_eq!(a.union(b).len(), 3);
        assert_eq!(a.difference(b).to_vec(), vec![1]);
        assert!(!a.is_disjoint(b));
        assert_eq!(IndexSet::full(3).to_vec(), vec![1, 2, 3]);
        assert_eq!(format!("{}", a), "{1,2}");
    }
}

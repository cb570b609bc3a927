//! Vertex sets over `0..n` backed by `u64` words.

use serde::ser::{Serialize, SerializeSeq, Serializer};
use std::fmt;

/// A set of vertices of a host graph, stored as a bitset.
///
/// The set remembers its capacity (the host's vertex count) so that
/// complements and full sets are well defined.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

impl VertexSet {
    /// Empty set over `0..n`.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; word_count(n)],
        }
    }

    /// Full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![!0u64; word_count(n)];
        if !n.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % 64)) - 1;
            }
        }
        VertexSet { n, words }
    }

    /// Singleton `{v}` over `0..n`.
    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(n: usize, vs: I) -> Self {
        let mut s = Self::empty(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Capacity of the host vertex range.
    pub fn capacity(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v >> 6] >> (v & 63) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn min(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some((i << 6) + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    /// Complement within the host range `0..n`.
    pub fn complement(&self) -> VertexSet {
        let mut s = Self::full(self.n);
        s.difference_with(self);
        s
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        !self.intersects(other)
    }

    /// Iterate members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some((i << 6) + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compare as sorted vertex lists (deterministic witness choice).
    pub fn cmp_lex(&self, other: &VertexSet) -> std::cmp::Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return std::cmp::Ordering::Equal,
                (None, Some(_)) => return std::cmp::Ordering::Less,
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (Some(x), Some(y)) => {
                    if x != y {
                        return x.cmp(&y);
                    }
                }
            }
        }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    /// Low word as a plain mask; only valid when the host has `n <= 64`.
    pub(crate) fn low_mask(&self) -> u64 {
        debug_assert!(self.n <= 64);
        self.words.first().copied().unwrap_or(0)
    }

    pub(crate) fn from_low_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n <= 64);
        VertexSet {
            n,
            words: if n == 0 { vec![] } else { vec![mask] },
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = VertexSet::empty(70);
        s.insert(0);
        s.insert(63);
        s.insert(64);
        s.insert(69);
        assert_eq!(s.len(), 4);
        assert!(s.contains(64));
        assert!(!s.contains(1));
        assert_eq!(s.to_vec(), vec![0, 63, 64, 69]);
        s.remove(63);
        assert_eq!(s.to_vec(), vec![0, 64, 69]);
        assert_eq!(s.min(), Some(0));
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_members(10, [1, 3, 5]);
        let b = VertexSet::from_members(10, [3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 3, 4, 5]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 5]);
        assert!(VertexSet::from_members(10, [1, 3]).is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
        assert_eq!(a.complement().len(), 7);
        assert_eq!(VertexSet::full(70).len(), 70);
        assert_eq!(VertexSet::full(64).len(), 64);
    }

    #[test]
    fn lex_order_is_sorted_list_order() {
        let a = VertexSet::from_members(6, [0, 3]);
        let b = VertexSet::from_members(6, [1, 2]);
        assert_eq!(a.cmp_lex(&b), std::cmp::Ordering::Less);
        let c = VertexSet::from_members(6, [0, 2]);
        assert_eq!(c.cmp_lex(&a), std::cmp::Ordering::Less);
    }
}

//! Fixed-width vertex subsets.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest vertex count a [`VertexSet`] can address.
pub const MAX_VERTICES: usize = 64;

/// A subset of `0..n` stored as a 64-bit mask.
///
/// The total order is by cardinality first and then by the numeric value of
/// the mask. This is the order in which subsets are enumerated everywhere in
/// the crate, so "the first witness" and "the smallest witness" coincide.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    /// All of `0..n`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement relative to `0..n`.
    pub const fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest member.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image of the set under a vertex map.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Self {
        self.iter().map(f).collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
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

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct SetVisitor;

        impl<'de> Visitor<'de> for SetVisitor {
            type Value = VertexSet;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of vertex indices below 64")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<VertexSet, A::Error> {
                let mut s = VertexSet::empty();
                while let Some(v) = seq.next_element::<usize>()? {
                    if v >= MAX_VERTICES {
                        return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
                    }
                    s.insert(v);
                }
                Ok(s)
            }
        }

        deserializer.deserialize_seq(SetVisitor)
    }
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Iterates the subsets of `0..n` with cardinality in `min_size..=max_size`,
/// by cardinality and then numerically (the [`VertexSet`] order).
#[derive(Clone, Debug)]
pub struct SubsetsBySize {
    n: usize,
    size: usize,
    max_size: usize,
    next: Option<u128>,
}

impl SubsetsBySize {
    pub fn new(n: usize, min_size: usize, max_size: usize) -> Self {
        let max_size = max_size.min(n);
        let next = (min_size <= max_size).then(|| lowest(min_size));
        SubsetsBySize {
            n,
            size: min_size,
            max_size,
            next,
        }
    }
}

fn lowest(k: usize) -> u128 {
    (1u128 << k) - 1
}

impl Iterator for SubsetsBySize {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        // Gosper's hack: next larger integer with the same popcount.
        let succ = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let s = (((r ^ cur) >> 2) / c) | r;
            (s >> self.n == 0).then_some(s)
        };
        self.next = match succ {
            Some(s) => Some(s),
            None if self.size < self.max_size => {
                self.size += 1;
                Some(lowest(self.size))
            }
            None => None,
        };
        Some(VertexSet(cur as u64))
    }
}

/// The `rank`-th subset (0-based) of `0..n` in [`VertexSet`] order, or `None`
/// when `rank >= 2^n`.
pub fn subset_at_rank(n: usize, mut rank: u64) -> Option<VertexSet> {
    for k in 0..=n {
        let level = binomial(n, k);
        if rank < level {
            // Colex unranking within the level.
            let mut bits = 0u64;
            let mut hi = n;
            for i in (1..=k).rev() {
                let mut c = i - 1;
                while c + 1 < hi && binomial(c + 1, i) <= rank {
                    c += 1;
                }
                rank -= binomial(c, i);
                bits |= 1u64 << c;
                hi = c;
            }
            return Some(VertexSet(bits));
        }
        rank -= level;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a: VertexSet = [0, 2, 5].into_iter().collect();
        let b: VertexSet = [2, 3].into_iter().collect();
        assert_eq!(a.union(b).to_vec(), vec![0, 2, 3, 5]);
        assert_eq!(a.intersection(b).to_vec(), vec![2]);
        assert_eq!(a.complement(6).to_vec(), vec![1, 3, 4]);
        assert_eq!(a.len(), 3);
        assert!(a.contains(5) && !a.contains(1) && !a.contains(70));
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(64).complement(64), VertexSet::empty());
    }

    #[test]
    fn order_is_size_then_numeric() {
        let mut v: Vec<VertexSet> = [0b100, 0b11, 0b1, 0b10]
            .into_iter()
            .map(VertexSet::from_bits)
            .collect();
        v.sort();
        let bits: Vec<u64> = v.iter().map(|s| s.bits()).collect();
        assert_eq!(bits, vec![0b1, 0b10, 0b100, 0b11]);
    }

    #[test]
    fn subsets_by_size_is_sorted_and_complete() {
        let all: Vec<VertexSet> = SubsetsBySize::new(5, 0, 5).collect();
        assert_eq!(all.len(), 32);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let pairs: Vec<VertexSet> = SubsetsBySize::new(4, 2, 2).collect();
        assert_eq!(pairs.len(), 6);
        assert_eq!(SubsetsBySize::new(64, 64, 64).count(), 1);
        assert_eq!(SubsetsBySize::new(3, 4, 9).count(), 0);
    }

    #[test]
    fn unranking_matches_iteration() {
        for n in 0..=7 {
            for (rank, s) in SubsetsBySize::new(n, 0, n).enumerate() {
                assert_eq!(subset_at_rank(n, rank as u64), Some(s));
            }
            assert_eq!(subset_at_rank(n, 1 << n), None);
        }
    }

    #[test]
    fn serde_as_sorted_array() {
        let s: VertexSet = [4, 1].into_iter().collect();
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,4]");
        let back: VertexSet = serde_json::from_str("[4,1]").unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<VertexSet>("[64]").is_err());
    }
}

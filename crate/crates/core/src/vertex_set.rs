//! Vertex sets over labels `1..=MAX_VERTICES`, stored as a bitmask.
//!
//! Vertex `v` occupies bit `v - 1`. Ordering is lexicographic on the
//! ascending vertex lists, which is the order every deterministic output in
//! the crate uses.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest vertex count any graph or complex may have.
pub const MAX_VERTICES: usize = 16;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1 << (v - 1))
    }

    /// The set `{1, ..., n}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u32::MAX >> (32 - n))
        }
    }

    /// The integer range `lo..=hi`, empty when `lo > hi`.
    #[inline]
    pub fn range(lo: usize, hi: usize) -> Self {
        if lo > hi {
            return VertexSet::EMPTY;
        }
        VertexSet(Self::full(hi).0 & !Self::full(lo - 1).0)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        (1..=32).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1 << (v - 1)))
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << (v - 1)))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    #[inline]
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self` with exactly `k` elements, in lexicographic order.
    pub fn subsets_of_size(self, k: usize) -> Subsets {
        Subsets::new(self, k)
    }

    /// Space separated vertex list, as used by the text file formats.
    pub fn to_line(self) -> String {
        let mut out = String::new();
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&v.to_string());
        }
        out
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
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

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let list = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = list.iter().find(|&&v| v == 0 || v > MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex {bad} outside 1..={MAX_VERTICES}"
            )));
        }
        Ok(list.into_iter().collect())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u32);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Fixed-size subsets of a set, lexicographic order.
pub struct Subsets {
    elems: Vec<usize>,
    idx: Vec<usize>,
    done: bool,
}

impl Subsets {
    fn new(set: VertexSet, k: usize) -> Self {
        let elems = set.to_vec();
        let done = k > elems.len();
        Subsets {
            elems,
            idx: (0..k).collect(),
            done,
        }
    }
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out: VertexSet = self.idx.iter().map(|&i| self.elems[i]).collect();
        let k = self.idx.len();
        let m = self.elems.len();
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < m - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s: VertexSet = [3, 1, 4].iter().collect();
        assert_eq!(s.to_vec(), vec![1, 3, 4]);
        assert_eq!(s.min(), Some(1));
        assert_eq!(s.max(), Some(4));
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(2));
        assert_eq!(VertexSet::range(2, 4).to_vec(), vec![2, 3, 4]);
        assert!(VertexSet::range(3, 2).is_empty());
        assert_eq!(VertexSet::full(16).len(), 16);
        assert_eq!(s.to_string(), "{1,3,4}");
        assert_eq!(s.to_line(), "1 3 4");
    }

    #[test]
    fn lexicographic_order() {
        let a: VertexSet = [1, 2].iter().collect();
        let b: VertexSet = [1, 2, 3].iter().collect();
        let c: VertexSet = [1, 3].iter().collect();
        let d: VertexSet = [2].iter().collect();
        let mut v = vec![d, c, b, a];
        v.sort();
        assert_eq!(v, vec![a, b, c, d]);
    }

    #[test]
    fn subsets_are_lexicographic_and_complete() {
        let s = VertexSet::full(5);
        let subs: Vec<_> = s.subsets_of_size(3).collect();
        assert_eq!(subs.len(), 10);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(s.subsets_of_size(0).collect::<Vec<_>>(), vec![VertexSet::EMPTY]);
        assert_eq!(s.subsets_of_size(6).count(), 0);
    }
}

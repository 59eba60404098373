//! Fixed-capacity bitsets over 1-based element ids.
//!
//! An [`ElementSet`] holds ids in `1..=64`; id `e` lives at bit `e - 1`. The
//! same type is used for plain ground sets and for the doubled ground set of
//! the external activity complex (see [`crate::complexes::SignedVertex`]).

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

/// A 1-based element id.
pub type Element = usize;

/// Largest id an [`ElementSet`] can hold.
pub const MAX_SLOT: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn new() -> Self {
        Self::EMPTY
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_SLOT, "ground size {n} exceeds {MAX_SLOT}");
        if n == MAX_SLOT {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: Element) -> Self {
        let mut s = Self::EMPTY;
        s.insert(e);
        s
    }

    pub fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    fn bit(e: Element) -> u64 {
        debug_assert!((1..=MAX_SLOT).contains(&e), "element {e} out of range");
        1u64 << (e - 1)
    }

    #[inline]
    pub fn contains(self, e: Element) -> bool {
        (1..=MAX_SLOT).contains(&e) && self.0 & Self::bit(e) != 0
    }

    pub fn insert(&mut self, e: Element) {
        self.0 |= Self::bit(e);
    }

    pub fn remove(&mut self, e: Element) {
        self.0 &= !Self::bit(e);
    }

    pub fn with(self, e: Element) -> Self {
        ElementSet(self.0 | Self::bit(e))
    }

    pub fn without(self, e: Element) -> Self {
        ElementSet(self.0 & !Self::bit(e))
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
    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest id, under the natural order of ids.
    pub fn first(self) -> Option<Element> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Largest id, under the natural order of ids.
    pub fn last(self) -> Option<Element> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Ids in increasing natural order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<Element> {
        self.iter().collect()
    }

    /// Every subset of `self`, starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Every subset of `self` with exactly `k` elements, in colex order of bits.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = ElementSet> {
        let members = self.to_vec();
        KSubsets::new(members.len(), k).map(move |idx| {
            idx.iter().fold(ElementSet::EMPTY, |acc, &i| acc.with(members[i]))
        })
    }
}

impl FromIterator<Element> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl<const N: usize> From<[Element; N]> for ElementSet {
    fn from(items: [Element; N]) -> Self {
        items.into_iter().collect()
    }
}

impl From<&[Element]> for ElementSet {
    fn from(items: &[Element]) -> Self {
        items.iter().copied().collect()
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: Self) -> Self {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: Self) -> Self {
        ElementSet(self.0 & rhs.0)
    }
}

impl BitXor for ElementSet {
    type Output = ElementSet;
    fn bitxor(self, rhs: Self) -> Self {
        ElementSet(self.0 ^ rhs.0)
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: Self) -> Self {
        ElementSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz as usize + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for ElementSet {
    type Item = Element;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Submask enumeration: `0, ..., mask` in increasing numeric order.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(ElementSet(cur))
    }
}

/// `k`-subsets of `0..n` as sorted index vectors, in lexicographic order.
pub struct KSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        KSubsets {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for KSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let k = cur.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
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
        let a = ElementSet::from([1, 2, 4]);
        let b = ElementSet::from([2, 3]);
        assert_eq!((a | b).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!((a & b).to_vec(), vec![2]);
        assert_eq!((a - b).to_vec(), vec![1, 4]);
        assert_eq!(a.first(), Some(1));
        assert_eq!(a.last(), Some(4));
        assert!(ElementSet::from([1, 4]).is_subset(a));
        assert!(!b.is_subset(a));
        assert_eq!(format!("{a}"), "{1,2,4}");
        assert!(!a.contains(0));
        assert!(!a.contains(65));
    }

    #[test]
    fn full_and_edges() {
        assert_eq!(ElementSet::full(0), ElementSet::EMPTY);
        assert_eq!(ElementSet::full(3).to_vec(), vec![1, 2, 3]);
        assert_eq!(ElementSet::full(64).len(), 64);
        assert!(ElementSet::full(64).contains(64));
        assert_eq!(ElementSet::EMPTY.first(), None);
    }

    #[test]
    fn subset_enumeration_counts() {
        let s = ElementSet::from([2, 5, 7]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
        assert_eq!(ElementSet::EMPTY.subsets().count(), 1);
        assert_eq!(ElementSet::full(5).subsets_of_size(2).count(), 10);
        assert_eq!(ElementSet::full(3).subsets_of_size(0).count(), 1);
        assert_eq!(ElementSet::full(3).subsets_of_size(4).count(), 0);
    }

    #[test]
    fn ksubsets_lex() {
        let v: Vec<_> = KSubsets::new(4, 2).collect();
        assert_eq!(
            v,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}

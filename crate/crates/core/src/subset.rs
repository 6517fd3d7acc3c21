//! Bit-mask subsets of a small ground set, and total orders on that ground set.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_ELEMENTS: usize = 62;

/// Element identifier. Internally 0-based; all I/O is 1-based.
pub type Element = usize;

/// A set of elements stored as a single machine word.
///
/// Ordering is by cardinality first and then by mask value, which is the
/// canonical output order used throughout the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS, "ground set of {n} elements exceeds {MAX_ELEMENTS}");
        if n == 0 {
            Subset(0)
        } else {
            Subset(u64::MAX >> (64 - n))
        }
    }

    pub fn singleton(x: Element) -> Self {
        debug_assert!(x < MAX_ELEMENTS);
        Subset(1 << x)
    }

    pub fn from_elements<I: IntoIterator<Item = Element>>(elems: I) -> Self {
        elems.into_iter().fold(Subset::EMPTY, |s, x| s.with(x))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, x: Element) -> bool {
        x < 64 && self.0 >> x & 1 == 1
    }

    pub fn with(self, x: Element) -> Self {
        Subset(self.0 | 1 << x)
    }

    pub fn without(self, x: Element) -> Self {
        Subset(self.0 & !(1 << x))
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Subset) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element id (not order aware).
    pub fn first(self) -> Option<Element> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Element)
    }

    pub fn last(self) -> Option<Element> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as Element)
    }

    /// Elements in increasing id order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self`, in increasing mask order (starting with the empty set).
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }

    /// All subsets of `self` in canonical (cardinality, mask) order.
    pub fn subsets_by_size(self) -> Vec<Subset> {
        let mut all: Vec<Subset> = self.subsets().collect();
        all.sort_unstable();
        all
    }

    /// Index of `self` inside `within` when the elements of `within` are
    /// renumbered `0..within.len()`. Used to address dense tables over `2^within`.
    pub fn compress(self, within: Subset) -> usize {
        let mut out = 0usize;
        for (i, x) in within.iter().enumerate() {
            if self.contains(x) {
                out |= 1 << i;
            }
        }
        out
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromIterator<Element> for Subset {
    fn from_iter<T: IntoIterator<Item = Element>>(iter: T) -> Self {
        Subset::from_elements(iter)
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as Element;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl DoubleEndedIterator for Elements {
    fn next_back(&mut self) -> Option<Element> {
        if self.0 == 0 {
            return None;
        }
        let x = 63 - self.0.leading_zeros() as Element;
        self.0 &= !(1 << x);
        Some(x)
    }
}

impl ExactSizeIterator for Elements {}

/// Carry-ripple enumeration of submasks.
pub struct Subsets {
    set: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        let succ = cur.wrapping_sub(self.set) & self.set;
        self.next = (succ != 0).then_some(succ);
        Some(Subset(cur))
    }
}

/// A total order on the element ids `0..n`.
///
/// `order[p]` is the element at position `p`; `rank[x]` is the position of `x`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroundOrder {
    order: Vec<Element>,
    rank: Vec<usize>,
}

impl GroundOrder {
    pub fn identity(n: usize) -> Self {
        GroundOrder {
            order: (0..n).collect(),
            rank: (0..n).collect(),
        }
    }

    pub fn reversed_identity(n: usize) -> Self {
        Self::from_sequence((0..n).rev().collect()).expect("reversal is a permutation")
    }

    /// Builds an order from the sequence of elements, smallest first.
    pub fn from_sequence(order: Vec<Element>) -> Result<Self> {
        let n = order.len();
        if n > MAX_ELEMENTS {
            return Err(Error::TooManyElements(n));
        }
        let mut rank = vec![usize::MAX; n];
        for (p, &x) in order.iter().enumerate() {
            if x >= n || rank[x] != usize::MAX {
                return Err(Error::InvalidOrder(format!(
                    "{:?} is not a permutation of 1..{n}",
                    order.iter().map(|x| x + 1).collect::<Vec<_>>()
                )));
            }
            rank[x] = p;
        }
        Ok(GroundOrder { order, rank })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn sequence(&self) -> &[Element] {
        &self.order
    }

    pub fn position(&self, x: Element) -> usize {
        self.rank[x]
    }

    pub fn less(&self, x: Element, y: Element) -> bool {
        self.rank[x] < self.rank[y]
    }

    pub fn reversed(&self) -> GroundOrder {
        let mut seq = self.order.clone();
        seq.reverse();
        GroundOrder::from_sequence(seq).expect("reversal is a permutation")
    }

    pub fn min_of(&self, set: Subset) -> Option<Element> {
        set.iter().min_by_key(|&x| self.rank[x])
    }

    pub fn max_of(&self, set: Subset) -> Option<Element> {
        set.iter().max_by_key(|&x| self.rank[x])
    }

    /// Elements of `set`, smallest first under this order.
    pub fn sorted(&self, set: Subset) -> Vec<Element> {
        let mut v: Vec<Element> = set.iter().collect();
        v.sort_unstable_by_key(|&x| self.rank[x]);
        v
    }

    /// Compares two sets as ascending words under this order, where a proper
    /// prefix is smaller.
    pub fn lex_cmp(&self, a: Subset, b: Subset) -> Ordering {
        let wa = self.sorted(a);
        let wb = self.sorted(b);
        for (x, y) in wa.iter().zip(&wb) {
            match self.rank[*x].cmp(&self.rank[*y]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        wa.len().cmp(&wb.len())
    }

    /// Lex comparison where a proper prefix counts as *larger*.
    pub fn lex_cmp_prefix_large(&self, a: Subset, b: Subset) -> Ordering {
        let wa = self.sorted(a);
        let wb = self.sorted(b);
        for (x, y) in wa.iter().zip(&wb) {
            match self.rank[*x].cmp(&self.rank[*y]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        wb.len().cmp(&wa.len())
    }
}

impl fmt::Debug for GroundOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.order.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "{}", parts.join("<"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(xs: &[usize]) -> Subset {
        xs.iter().map(|x| x - 1).collect()
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let all: Vec<Subset> = s(&[1, 3, 4]).subsets().collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], Subset::EMPTY);
        assert!(all.iter().all(|x| x.is_subset(s(&[1, 3, 4]))));
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn canonical_order_is_size_then_mask() {
        let mut v = vec![s(&[1, 2]), s(&[3]), Subset::EMPTY, s(&[1])];
        v.sort();
        assert_eq!(v, vec![Subset::EMPTY, s(&[1]), s(&[3]), s(&[1, 2])]);
    }

    #[test]
    fn compress_is_dense() {
        let within = s(&[2, 5, 7]);
        assert_eq!(s(&[5]).compress(within), 0b010);
        assert_eq!(s(&[2, 7]).compress(within), 0b101);
    }

    #[test]
    fn ground_order_rejects_non_permutations() {
        assert!(GroundOrder::from_sequence(vec![0, 0]).is_err());
        assert!(GroundOrder::from_sequence(vec![0, 2]).is_err());
        let o = GroundOrder::from_sequence(vec![2, 0, 1]).unwrap();
        assert_eq!(o.min_of(s(&[1, 2, 3])), Some(2));
        assert_eq!(o.max_of(s(&[1, 2, 3])), Some(1));
    }

    #[test]
    fn lex_prefix_conventions() {
        let o = GroundOrder::identity(4);
        assert_eq!(o.lex_cmp(s(&[1]), s(&[1, 2])), Ordering::Less);
        assert_eq!(o.lex_cmp_prefix_large(s(&[1]), s(&[1, 2])), Ordering::Greater);
        assert_eq!(o.lex_cmp(s(&[3, 4]), s(&[2, 3])), Ordering::Greater);
    }
}

//! Element sets as 64-bit masks over a shared label table.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use crate::error::{Error, Result};

pub const MAX_ELEMENTS: usize = 64;

/// Ordered table of distinct element labels; index `i` is label `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidParameter("empty ground set".into()));
        }
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::GroundTooLarge {
                size: labels.len(),
                limit: MAX_ELEMENTS,
            });
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::InvalidParameter(alloc::format!(
                    "duplicate element label `{a}`"
                )));
            }
        }
        Ok(Self { labels })
    }

    /// Labels `1..=n`, the usual `[n]`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| alloc::format!("{i}")))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    /// Looks up every label; `None` if any is unknown.
    pub fn set_of<'a, I>(&self, labels: I) -> Option<ElemSet>
    where
        I: IntoIterator<Item = &'a str>,
    {
        labels
            .into_iter()
            .try_fold(ElemSet::EMPTY, |acc, l| Some(acc.with(self.index_of(l)?)))
    }

    pub fn labels_of(&self, set: ElemSet) -> Vec<String> {
        set.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// `{a,b,c}` rendering of a set.
    pub fn display(&self, set: ElemSet) -> String {
        let mut out = String::from("{");
        for (n, i) in set.iter().enumerate() {
            if n > 0 {
                out.push(',');
            }
            out.push_str(&self.labels[i]);
        }
        out.push('}');
        out
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.labels).finish()
    }
}

/// A set of element indices.
///
/// The derived `Ord` is the canonical order used throughout the crate:
/// by cardinality, then lexicographically on the ascending index lists.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElemSet(u64);

impl ElemSet {
    pub const EMPTY: Self = Self(0);

    pub const fn from_mask(mask: u64) -> Self {
        Self(mask)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            Self(u64::MAX)
        } else {
            Self((1u64 << n) - 1)
        }
    }

    pub const fn singleton(i: usize) -> Self {
        Self(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().fold(Self::EMPTY, Self::with)
    }

    #[must_use]
    pub const fn with(self, i: usize) -> Self {
        Self(self.0 | (1u64 << i))
    }

    #[must_use]
    pub const fn without(self, i: usize) -> Self {
        Self(self.0 & !(1u64 << i))
    }

    pub const fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
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

    pub const fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn intersects(self, other: Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Smallest index in the set.
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Complement relative to `within`.
    #[must_use]
    pub const fn complement_in(self, within: Self) -> Self {
        Self(within.0 & !self.0)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Every subset of `self`, in increasing mask order, starting with the
    /// empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(0),
        }
    }

    /// Subsets of `self` with exactly `size` elements, in colexicographic
    /// order of their index lists.
    pub fn subsets_of_size(self, size: usize) -> SubsetsOfSize {
        SubsetsOfSize::new(self, size)
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            // Equal cardinality: the first differing position of the sorted
            // index lists is the smallest element of the symmetric difference.
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for ElemSet {
    type Output = Self;
    fn bitor(self, rhs: Self) -> Self {
        Self(self.0 | rhs.0)
    }
}

impl BitAnd for ElemSet {
    type Output = Self;
    fn bitand(self, rhs: Self) -> Self {
        Self(self.0 & rhs.0)
    }
}

impl BitXor for ElemSet {
    type Output = Self;
    fn bitxor(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

impl Sub for ElemSet {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 & !rhs.0)
    }
}

impl Not for ElemSet {
    type Output = Self;
    fn not(self) -> Self {
        Self(!self.0)
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_indices(iter)
    }
}

impl IntoIterator for ElemSet {
    type Item = usize;
    type IntoIter = Elements;
    fn into_iter(self) -> Elements {
        self.iter()
    }
}

/// Ascending element indices of a set.
#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// All subsets of a mask via the carry-rippler step `s = (s - u) & u`.
#[derive(Clone)]
pub struct Subsets {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElemSet;

    fn next(&mut self) -> Option<ElemSet> {
        let current = self.next?;
        let step = current.wrapping_sub(self.universe) & self.universe;
        self.next = if step == 0 { None } else { Some(step) };
        Some(ElemSet(current))
    }
}

/// Fixed-size subsets: Gosper's hack on the compressed positions, then
/// scattered back onto the universe.
#[derive(Clone)]
pub struct SubsetsOfSize {
    positions: Vec<u8>,
    current: Option<u128>,
    limit: u128,
}

impl SubsetsOfSize {
    fn new(universe: ElemSet, size: usize) -> Self {
        let positions: Vec<u8> = universe.iter().map(|i| i as u8).collect();
        let width = positions.len();
        let current = if size > width {
            None
        } else {
            Some((1u128 << size) - 1)
        };
        Self {
            positions,
            current,
            limit: 1u128 << width,
        }
    }

    fn scatter(&self, compressed: u128) -> ElemSet {
        let mut mask = 0u64;
        let mut bits = compressed;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            mask |= 1u64 << self.positions[j];
            bits &= bits - 1;
        }
        ElemSet(mask)
    }
}

impl Iterator for SubsetsOfSize {
    type Item = ElemSet;

    fn next(&mut self) -> Option<ElemSet> {
        let current = self.current?;
        let out = self.scatter(current);
        self.current = if current == 0 {
            None
        } else {
            let low = current & current.wrapping_neg();
            let ripple = current + low;
            let next = (((ripple ^ current) >> 2) / low) | ripple;
            (next < self.limit).then_some(next)
        };
        Some(out)
    }
}

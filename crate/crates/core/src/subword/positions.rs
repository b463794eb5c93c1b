use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Longest word whose positions fit in a [`PositionSet`].
pub const MAX_WORD_LEN: usize = 128;

pub(crate) fn check_len(len: usize) -> Result<()> {
    if len > MAX_WORD_LEN {
        return Err(Error::ResourceLimit { what: format!("word of length {len}"), limit: MAX_WORD_LEN });
    }
    Ok(())
}

/// A set of 0-based positions in a word of at most 128 letters.
/// Ordered lexicographically by the ascending position lists; serialized
/// as a list of 1-based positions.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct PositionSet(u128);

impl PositionSet {
    pub const EMPTY: PositionSet = PositionSet(0);

    pub fn from_bits(bits: u128) -> Self {
        PositionSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    /// `{0, …, len−1}`.
    pub fn full(len: usize) -> Self {
        if len >= 128 {
            PositionSet(u128::MAX)
        } else {
            PositionSet((1u128 << len) - 1)
        }
    }

    pub fn from_positions(positions: impl IntoIterator<Item = usize>) -> Self {
        positions.into_iter().fold(PositionSet::EMPTY, |acc, p| acc.with(p))
    }

    /// From 1-based positions, rejecting anything outside `1..=len`.
    pub fn from_one_based(positions: &[usize], len: usize) -> Result<Self> {
        let mut out = PositionSet::EMPTY;
        for &p in positions {
            if p == 0 || p > len {
                return Err(Error::PositionOutOfRange { position: p, len });
            }
            out.insert(p - 1);
        }
        Ok(out)
    }

    pub fn contains(self, p: usize) -> bool {
        p < 128 && self.0 >> p & 1 == 1
    }

    pub fn insert(&mut self, p: usize) {
        self.0 |= 1u128 << p;
    }

    pub fn remove(&mut self, p: usize) {
        self.0 &= !(1u128 << p);
    }

    pub fn with(mut self, p: usize) -> Self {
        self.insert(p);
        self
    }

    pub fn without(mut self, p: usize) -> Self {
        self.remove(p);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: PositionSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: PositionSet) -> Self {
        PositionSet(self.0 | other.0)
    }

    pub fn intersection(self, other: PositionSet) -> Self {
        PositionSet(self.0 & other.0)
    }

    pub fn difference(self, other: PositionSet) -> Self {
        PositionSet(self.0 & !other.0)
    }

    /// Positions of `0..len` not in the set.
    pub fn complement(self, len: usize) -> Self {
        PositionSet(!self.0 & PositionSet::full(len).0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let p = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(p)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|p| p + 1).collect()
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }
}

impl Ord for PositionSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for PositionSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for PositionSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        PositionSet::from_positions(iter)
    }
}

impl fmt::Debug for PositionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// 1-based, e.g. `{1,2}`.
impl fmt::Display for PositionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|p| (p + 1).to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for PositionSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_one_based().serialize(serializer)
    }
}

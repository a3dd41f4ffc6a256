//! Coordinate subsets of [n], stored as 0-based bitmasks.
//!
//! Interfaces that take or print coordinates use the 1-based labels of [n].

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{LrcError, Result};

/// Longest code length a `CoordSet` can describe.
pub const MAX_LENGTH: usize = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize)]
pub struct CoordSet(pub u64);

impl CoordSet {
    pub const EMPTY: CoordSet = CoordSet(0);

    /// [n] = {1, ..., n}.
    pub fn full(n: usize) -> CoordSet {
        debug_assert!(n <= MAX_LENGTH);
        if n == 64 {
            CoordSet(u64::MAX)
        } else {
            CoordSet((1u64 << n) - 1)
        }
    }

    /// Builds a set from 1-based labels, each of which must lie in [n].
    pub fn from_labels(labels: &[usize], n: usize) -> Result<CoordSet> {
        let mut bits = 0u64;
        for &c in labels {
            if c == 0 || c > n {
                return Err(LrcError::CoordinateOutOfRange { coord: c, n });
            }
            bits |= 1 << (c - 1);
        }
        Ok(CoordSet(bits))
    }

    /// Builds a set from 0-based indices; panics past `MAX_LENGTH`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> CoordSet {
        CoordSet(indices.into_iter().fold(0, |acc, i| acc | (1u64 << i)))
    }

    #[inline]
    pub fn singleton(index: usize) -> CoordSet {
        CoordSet(1 << index)
    }

    #[inline]
    pub fn contains(self, index: usize) -> bool {
        self.0 >> index & 1 == 1
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
    pub fn is_subset(self, other: CoordSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: CoordSet) -> CoordSet {
        CoordSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: CoordSet) -> CoordSet {
        CoordSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: CoordSet) -> CoordSet {
        CoordSet(self.0 & !other.0)
    }

    /// Complement inside [n].
    #[inline]
    pub fn complement(self, n: usize) -> CoordSet {
        CoordSet(!self.0 & CoordSet::full(n).0)
    }

    #[inline]
    pub fn insert(&mut self, index: usize) {
        self.0 |= 1 << index;
    }

    /// Largest index plus one, or 0 for the empty set.
    pub fn bound(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// 0-based members in ascending order.
    pub fn indices(self) -> Indices {
        Indices(self.0)
    }

    /// 1-based labels in ascending order.
    pub fn labels(self) -> Vec<usize> {
        self.indices().map(|i| i + 1).collect()
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    pub fn check_within(self, n: usize) -> Result<()> {
        if self.bound() > n {
            return Err(LrcError::CoordinateOutOfRange { coord: self.bound(), n });
        }
        Ok(())
    }
}

impl fmt::Display for CoordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, label) in self.labels().into_iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{label}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for CoordSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(serializer)
    }
}

pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = CoordSet;

    fn next(&mut self) -> Option<CoordSet> {
        let current = self.next?;
        // standard submask walk, upward
        let succ = current.wrapping_sub(self.mask) & self.mask;
        self.next = if succ == 0 { None } else { Some(succ) };
        Some(CoordSet(current))
    }
}

/// All t-subsets of {0, ..., n-1}, in increasing bitmask order.
pub fn subsets_of_size(n: usize, t: usize) -> impl Iterator<Item = CoordSet> {
    let limit = CoordSet::full(n).0;
    let mut next = if t > n {
        None
    } else if t == 0 {
        Some(0u64)
    } else {
        Some(CoordSet::full(t).0)
    };
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 {
            None
        } else {
            // Gosper's hack
            let c = current & current.wrapping_neg();
            let r = current.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let succ = (((r ^ current) >> 2) / c) | r;
                if succ > limit || succ == 0 {
                    None
                } else {
                    Some(succ)
                }
            }
        };
        Some(CoordSet(current))
    })
}

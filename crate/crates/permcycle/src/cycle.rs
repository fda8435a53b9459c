//! Canonical cycle types: multisets of (length, multiplicity) pairs.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Cycle type of a permutation, ascending lengths, equal lengths merged.
/// Displays as "1+3^4" (multiplicity 1 omits the caret).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CycleType {
    parts: Vec<(u64, u64)>,
}

impl CycleType {
    pub fn from_parts(parts: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut merged: BTreeMap<u64, u64> = BTreeMap::new();
        for (len, mult) in parts {
            if len == 0 || mult == 0 {
                continue;
            }
            *merged.entry(len).or_insert(0) += mult;
        }
        CycleType {
            parts: merged.into_iter().collect(),
        }
    }

    /// Builds from a flat list of cycle lengths.
    pub fn from_lengths(lengths: impl IntoIterator<Item = u64>) -> Self {
        Self::from_parts(lengths.into_iter().map(|l| (l, 1)))
    }

    pub fn parts(&self) -> &[(u64, u64)] {
        &self.parts
    }

    /// Number of points moved or fixed: sum of length * multiplicity.
    pub fn total(&self) -> u64 {
        self.parts.iter().map(|&(l, m)| l * m).sum()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(out, "0");
        }
        for (idx, &(len, mult)) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(out, "+")?;
            }
            if mult == 1 {
                write!(out, "{len}")?;
            } else {
                write!(out, "{len}^{mult}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merges_and_sorts() {
        let t = CycleType::from_lengths(vec![3, 1, 3, 3, 3]);
        assert_eq!(t.parts(), &[(1, 1), (3, 4)]);
        assert_eq!(t.to_string(), "1+3^4");
        assert_eq!(t.total(), 13);
    }

    #[test]
    fn all_fixed() {
        let t = CycleType::from_parts(vec![(1, 13)]);
        assert_eq!(t.to_string(), "1^13");
    }

    #[test]
    fn mixed_display() {
        let t = CycleType::from_parts(vec![(1, 1), (2, 3), (3, 2)]);
        assert_eq!(t.to_string(), "1+2^3+3^2");
    }
}

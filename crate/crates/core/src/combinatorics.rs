//! Integer partitions and their statistics.
//!
//! Partitions are stored as weakly decreasing part lists. The multiplicity
//! view `k -> b_k` (number of parts equal to `k`) is derived on demand.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partition parts must be positive, found 0")]
    ZeroPart,
    #[error("partition parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// A partition of a non-negative integer.
///
/// The derived ordering compares part lists lexicographically, which is what
/// [`BTreeMap`] keys need; enumeration order is produced by [`partitions_of`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Size, length and multiplicities of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    pub size: u32,
    pub length: u32,
    pub multiplicities: BTreeMap<u32, u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts into decreasing order; zero parts are rejected.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Rebuilds the partition with `b_k` parts of size `k`. Zero
    /// multiplicities are ignored.
    pub fn from_multiplicities(multiplicities: &BTreeMap<u32, u32>) -> Result<Self, PartitionError> {
        if multiplicities.iter().any(|(&k, &b)| k == 0 && b > 0) {
            return Err(PartitionError::ZeroPart);
        }
        let parts = multiplicities.iter().rev().flat_map(|(&k, &b)| std::iter::repeat(k).take(b as usize)).collect();
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `k`.
    pub fn multiplicity(&self, k: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == k).count() as u32
    }

    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut out = BTreeMap::new();
        for &p in &self.parts {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    pub fn stats(&self) -> PartitionStats {
        PartitionStats { size: self.size(), length: self.length(), multiplicities: self.multiplicities() }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"3,1,1"`, `"(3,1,1)"` or `""`/`"()"` (the empty partition). Parts
/// may come in any order.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Self::from_unsorted(parts)
    }
}

/// All partitions of `n`, each exactly once, in reverse-lexicographic order:
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for first in (1..=remaining.min(max_part)).rev() {
        current.push(first);
        fill(remaining - first, first, current, out);
        current.pop();
    }
}

/// All partitions of every size in `0..=max_size`, grouped by size.
pub fn partitions_up_to(max_size: u32) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partitions_of_zero_is_the_empty_partition() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
    }

    #[test]
    fn partitions_of_two() {
        assert_eq!(partitions_of(2), vec![p(&[2]), p(&[1, 1])]);
    }

    #[test]
    fn reverse_lexicographic_order() {
        let got = partitions_of(4);
        assert_eq!(got, vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
    }

    #[test]
    fn partitions_of_six_has_eleven_entries() {
        assert_eq!(partitions_of(6).len(), 11);
    }

    #[test]
    fn stats_examples() {
        let s = p(&[3, 1, 1]).stats();
        assert_eq!((s.size, s.length), (5, 3));
        assert_eq!(s.multiplicities, BTreeMap::from([(1, 2), (3, 1)]));

        let s = Partition::empty().stats();
        assert_eq!((s.size, s.length), (0, 0));
        assert!(s.multiplicities.is_empty());

        let s = p(&[2, 2, 2]).stats();
        assert_eq!((s.size, s.length), (6, 3));
        assert_eq!(s.multiplicities, BTreeMap::from([(2, 3)]));
    }

    #[test]
    fn rejects_invalid_parts() {
        assert_eq!(Partition::new(vec![2, 0]), Err(PartitionError::ZeroPart));
        assert!(matches!(Partition::new(vec![1, 2]), Err(PartitionError::NotDecreasing(_))));
    }

    #[test]
    fn parse_and_display() {
        let a: Partition = "1,3,1".parse().unwrap();
        assert_eq!(a, p(&[3, 1, 1]));
        assert_eq!(a.to_string(), "(3,1,1)");
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,x".parse::<Partition>().is_err());
    }

    #[test]
    fn every_partition_is_valid_and_distinct() {
        for n in 0..=12 {
            let all = partitions_of(n);
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), all.len());
            for part in &all {
                assert_eq!(part.size(), n);
                assert!(Partition::new(part.parts().to_vec()).is_ok());
                let s = part.stats();
                let weighted: u32 = s.multiplicities.iter().map(|(k, b)| k * b).sum();
                let count: u32 = s.multiplicities.values().sum();
                assert_eq!(weighted, s.size);
                assert_eq!(count, s.length);
            }
        }
    }

    #[test]
    fn multiplicity_round_trip() {
        for part in partitions_up_to(10) {
            let back = Partition::from_multiplicities(&part.multiplicities()).unwrap();
            assert_eq!(back, part);
        }
    }
}

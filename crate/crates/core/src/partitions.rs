//! Integer partitions and bipartitions (ordered pairs of partitions).
//!
//! A partition is stored as its weakly decreasing part list; parts are
//! strictly positive. Bipartitions of `d` index the basis of the degree-`d`
//! creation space: the first component records `a`-mode depths, the second
//! `a*`-mode depths.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Panics on increasing or zero parts; construction is programmer-facing.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, each weakly decreasing, in lexicographic order of
/// the part vectors.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn empty() -> Self {
        Bipartition::default()
    }

    pub fn total(&self) -> u32 {
        self.first.total() + self.second.total()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|{}]", self.first, self.second)
    }
}

/// All bipartitions of `d`, ordered lexicographically by (first, second).
/// The order is part of the external interface: matrix realizations and
/// reports index rows and columns by it.
pub fn bipartitions_of(d: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for w1 in 0..=d {
        for p1 in partitions_of(w1) {
            for p2 in partitions_of(d - w1) {
                out.push(Bipartition::new(p1.clone(), p2));
            }
        }
    }
    out.sort();
    out
}

pub fn count_bipartitions(d: u32) -> u64 {
    bipartitions_of(d).len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts_low_range() {
        let expected = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(partitions_of(n as u32).len(), e, "p({n})");
        }
    }

    #[test]
    fn partitions_are_sorted_and_decreasing() {
        let ps = partitions_of(6);
        for p in &ps {
            assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
            assert_eq!(p.total(), 6);
        }
        let mut sorted = ps.clone();
        sorted.sort();
        assert_eq!(ps, sorted);
        assert_eq!(ps.len(), 11);
    }

    #[test]
    fn bipartition_counts_match_frozen_values() {
        // coefficients of prod (1-q^n)^{-2}
        let expected = [1u64, 2, 5, 10, 20, 36, 65];
        for (d, &e) in expected.iter().enumerate() {
            assert_eq!(count_bipartitions(d as u32), e, "P2({d})");
        }
    }

    #[test]
    fn bipartitions_of_two_listed() {
        let bps = bipartitions_of(2);
        let strings: Vec<String> = bps.iter().map(|b| b.to_string()).collect();
        assert_eq!(bps.len(), 5);
        // lexicographic on (first, second)
        assert_eq!(
            strings,
            vec!["[()|(1,1)]", "[()|(2)]", "[(1)|(1)]", "[(1,1)|()]", "[(2)|()]"]
        );
    }

    #[test]
    fn membership_example() {
        let bp = Bipartition::new(
            Partition::new(vec![4, 1]),
            Partition::new(vec![2, 2, 1]),
        );
        assert_eq!(bp.total(), 10);
        assert!(bipartitions_of(10).contains(&bp));
    }

    #[test]
    #[should_panic]
    fn increasing_parts_are_rejected() {
        Partition::new(vec![1, 2]);
    }
}

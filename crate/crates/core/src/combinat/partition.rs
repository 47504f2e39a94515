use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use super::arith::factorial;
use crate::error::{Error, Result};

/// An integer partition, stored as weakly decreasing positive parts.
///
/// Partitions order first by weight, then reverse-lexicographically on the
/// part sequence, so `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`. Every map
/// keyed by `Partition` therefore iterates in the canonical listing order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle `(part^count)`.
    pub fn rectangle(part: usize, count: usize) -> Self {
        assert!(part > 0 || count == 0);
        Partition { parts: vec![part; count] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(part, multiplicity)` pairs in increasing order of part.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// Order of the centralizer of a permutation of this cycle type:
    /// the product of `i^{a_i} a_i!`.
    pub fn z_value(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::from(1), |acc, (i, a)| {
                acc * BigInt::from(i).pow(a as u32) * factorial(a)
            })
    }

    pub fn all_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    /// The multiset union of parts, i.e. the index of `p_self * p_other`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.length() + other.length());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts }
    }

    /// Every part multiplied by `factor`.
    pub fn scaled(&self, factor: usize) -> Partition {
        assert!(factor > 0);
        Partition {
            parts: self.parts.iter().map(|p| p * factor).collect(),
        }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
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

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Iterator over the partitions of `n` in reverse-lexicographic order,
/// holding only the current partition.
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions { current: Some(first) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        // Successor: drop the trailing ones, decrement the last part > 1,
        // and refill the freed amount greedily with parts no larger than it.
        let mut next = cur.clone();
        let mut freed = 0;
        while next.last() == Some(&1) {
            next.pop();
            freed += 1;
        }
        if let Some(last) = next.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > 0 {
                let part = freed.min(cap);
                next.push(part);
                freed -= part;
            }
            self.current = Some(next);
        }
        Some(Partition { parts: cur })
    }
}

/// All partitions of `n` in canonical order; `n = 0` gives the empty partition.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    Partitions::new(n).collect()
}

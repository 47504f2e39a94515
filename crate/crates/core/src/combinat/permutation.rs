use std::fmt;
use std::str::FromStr;

use super::{Composition, Partition};
use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
///
/// Composition is right-to-left: `sigma.compose(&tau)` maps `i` to
/// `sigma(tau(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(word));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `sigma(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// The permutation `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Permutation {
            word: other.word.iter().map(|&v| self.word[v - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v - 1] = i + 1;
        }
        Permutation { word }
    }

    pub fn pow(&self, m: usize) -> Permutation {
        let mut acc = Permutation::identity(self.len());
        for _ in 0..m {
            acc = self.compose(&acc).expect("equal lengths");
        }
        acc
    }

    /// Positions `i` with `sigma(i) > sigma(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&i| self.word[i - 1] > self.word[i])
            .collect()
    }

    /// The shape `C(sigma)`.
    pub fn descent_composition(&self) -> Composition {
        Composition::from_descent_set(self.len(), &self.descents())
            .expect("descents form a valid subset")
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.word[i] - 1;
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycle_lengths()).expect("cycle lengths are positive")
    }

    /// Order of the permutation (lcm of cycle lengths); 1 for the empty permutation.
    pub fn order(&self) -> usize {
        self.cycle_lengths()
            .into_iter()
            .fold(1, num_integer::lcm)
    }

    /// 1-based position of the value `n`.
    pub fn max_position(&self) -> Option<usize> {
        let n = self.len();
        self.word.iter().position(|&v| v == n).map(|i| i + 1)
    }

    pub fn is_unimodal(&self) -> bool {
        self.descent_composition().hook_leg().is_some() || self.is_empty()
    }

    /// All permutations of length `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { word: word.clone() });
            // next lexicographic permutation
            let Some(i) = (1..word.len()).rev().find(|&i| word[i - 1] < word[i]) else {
                break;
            };
            let j = (i..word.len()).rev().find(|&j| word[j] > word[i - 1]).unwrap();
            word.swap(i - 1, j);
            word[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let body: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", body.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts either a digit string (`"42687135"`) or comma/space separated values.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: std::result::Result<Vec<usize>, _> = if s.contains([',', ' ']) {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>())
                .collect()
        } else {
            s.chars().map(|c| c.to_string().parse::<usize>()).collect()
        };
        let word = word.map_err(|e| Error::InvalidArgument(format!("{s:?}: {e}")))?;
        Permutation::new(word)
    }
}

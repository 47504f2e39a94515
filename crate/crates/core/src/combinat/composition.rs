use std::fmt;

use crate::error::{Error, Result};

/// An ordered sequence of positive parts; the descent shape of a permutation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition { parts })
    }

    /// The hook `(n-k, 1^k)`.
    pub fn hook(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k >= n {
            return Err(Error::InvalidArgument(format!(
                "hook (n-k,1^k) needs 0 <= k < n, got n = {n}, k = {k}"
            )));
        }
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat_n(1, k));
        Ok(Composition { parts })
    }

    /// Rebuilds the composition of `n` whose descent set is `descents`.
    pub fn from_descent_set(n: usize, descents: &[usize]) -> Result<Self> {
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut prev = 0;
        for &d in descents {
            if d <= prev || d >= n {
                return Err(Error::InvalidArgument(format!(
                    "descent set {descents:?} is not a strictly increasing subset of 1..{n}"
                )));
            }
            parts.push(d - prev);
            prev = d;
        }
        if n > 0 {
            parts.push(n - prev);
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Partial sums `i_1, i_1+i_2, ...`, excluding the total.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.parts.len().saturating_sub(1));
        for &p in &self.parts[..self.parts.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// `Some(k)` when the composition is the hook `(n-k, 1^k)`.
    pub fn hook_leg(&self) -> Option<usize> {
        match self.parts.split_first() {
            Some((_, rest)) if rest.iter().all(|&p| p == 1) => Some(rest.len()),
            _ => None,
        }
    }

    /// All compositions of `n`, ordered by descent set bitmask.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition { parts: Vec::new() }];
        }
        (0u64..1 << (n - 1))
            .map(|mask| {
                let descents: Vec<usize> =
                    (1..n).filter(|d| mask >> (d - 1) & 1 == 1).collect();
                Composition::from_descent_set(n, &descents).expect("valid descent set")
            })
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descent_set_round_trip() {
        let c = Composition::new(vec![2, 2, 1, 3]).unwrap();
        assert_eq!(c.descent_set(), vec![2, 4, 5]);
        assert_eq!(Composition::from_descent_set(8, &[2, 4, 5]).unwrap(), c);
        for n in 1..=8 {
            for c in Composition::all(n) {
                assert_eq!(c.size(), n);
                assert_eq!(Composition::from_descent_set(n, &c.descent_set()).unwrap(), c);
            }
        }
    }

    #[test]
    fn hooks() {
        assert_eq!(Composition::hook(5, 2).unwrap().parts(), &[3, 1, 1]);
        assert_eq!(Composition::hook(5, 2).unwrap().hook_leg(), Some(2));
        assert_eq!(Composition::new(vec![1, 2]).unwrap().hook_leg(), None);
        assert!(Composition::hook(3, 3).is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
        assert!(Composition::from_descent_set(4, &[2, 2]).is_err());
    }
}

//! Brute-force ground truth.
//!
//! Unimodal permutations are generated directly from their tails: choosing
//! the set `T ⊆ {1..n-1}` of values placed after the maximum determines the
//! word (the complement and `n` ascending, then `T` descending), so `U_n` has
//! exactly `2^{n-1}` elements and nothing is filtered out of `S_n`.

mod group_algebra;

pub use group_algebra::{
    classify_product_shape, kreweras_coefficient, kreweras_coefficient_as_printed,
    unimodal_product, unimodal_product_oriented, GroupAlgebraElement, ProductOrientation,
    ProductShape, PRODUCT_CAP, PRODUCT_ORIENTATION,
};

use crate::combinat::{partitions_of, Permutation};
use crate::error::{Error, Result};
use crate::ring::{QPoly, Rational};
use crate::theorems::{CycleCount, CycleCountTable};

/// Largest `n` for which unimodal permutations are enumerated.
pub const ENUMERATION_CAP: usize = 20;

/// A unimodal permutation together with the data of its construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodalWitness {
    permutation: Permutation,
    tail: Vec<usize>,
}

impl UnimodalWitness {
    pub fn permutation(&self) -> &Permutation {
        &self.permutation
    }

    /// The values after the maximum, in increasing order.
    pub fn tail(&self) -> &[usize] {
        &self.tail
    }

    /// Number of descents; the shape is the hook `(n-k, 1^k)`.
    pub fn k(&self) -> usize {
        self.tail.len()
    }

    /// 1-based position `m = n - k` of the maximum.
    pub fn max_position(&self) -> usize {
        self.permutation.len() - self.k()
    }

    /// `ν(σ) = (-1)^k`.
    pub fn sign(&self) -> i64 {
        if self.k() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

fn check_cap(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded { n, cap: ENUMERATION_CAP });
    }
    Ok(())
}

/// The witness for the tail encoded by `mask` (bit `i` set means `i + 1`
/// is in the tail).
fn witness(n: usize, mask: u64) -> UnimodalWitness {
    let tail: Vec<usize> = (1..n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
    let mut word: Vec<usize> = (1..n).filter(|v| mask >> (v - 1) & 1 == 0).collect();
    word.push(n);
    word.extend(tail.iter().rev());
    UnimodalWitness {
        permutation: Permutation::new(word).expect("tail construction yields a permutation"),
        tail,
    }
}

/// Iterates over `U_n` in order of tail bitmask.
pub fn unimodal_iter(n: usize) -> Result<impl Iterator<Item = UnimodalWitness>> {
    check_cap(n)?;
    Ok((0u64..1 << (n - 1)).map(move |mask| witness(n, mask)))
}

/// All `2^{n-1}` unimodal permutations of length `n`.
pub fn enumerate_unimodal(n: usize) -> Result<Vec<UnimodalWitness>> {
    Ok(unimodal_iter(n)?.collect())
}

/// Tally of `U_n` by cycle type: counts and `Σ q^k` by hook parameter.
pub fn tabulate(n: usize) -> Result<CycleCountTable> {
    let mut counts: std::collections::BTreeMap<_, (u64, Vec<u64>)> = partitions_of(n)
        .into_iter()
        .map(|a| (a, (0, vec![0; n])))
        .collect();
    for w in unimodal_iter(n)? {
        let entry = counts
            .get_mut(&w.permutation().cycle_type())
            .expect("every cycle type is a partition of n");
        entry.0 += 1;
        entry.1[w.k()] += 1;
    }
    let entries = counts.into_iter().map(|(a, (count, by_k))| {
        let q = QPoly::from_coeffs(by_k.into_iter().map(|c| Rational::from_integer(c.into())).collect());
        (a, CycleCount { count, q_refinement: q })
    });
    CycleCountTable::from_entries(n, entries)
}

/// Number of unimodal permutations of length `n` satisfying `pred`.
pub fn count_unimodal(n: usize, pred: impl Fn(&Permutation) -> bool) -> Result<u64> {
    Ok(unimodal_iter(n)?.filter(|w| pred(w.permutation())).count() as u64)
}

/// Unimodal `n`-cycles.
pub fn transitive_count(n: usize) -> Result<u64> {
    count_unimodal(n, |s| s.cycle_lengths().len() == 1)
}

/// Unimodal permutations with no cycle of length `k`.
pub fn no_k_cycle_count(n: usize, k: usize) -> Result<u64> {
    count_unimodal(n, |s| !s.cycle_lengths().contains(&k))
}

/// Unimodal permutations with `σ^m = 1`.
pub fn order_divides_count(n: usize, m: usize) -> Result<u64> {
    count_unimodal(n, |s| m % s.order() == 0)
}

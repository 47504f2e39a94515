use std::collections::BTreeMap;

use num_traits::One;

use super::counts::{u_alpha_via_specialization, u_alpha_q_with_hooks};
use crate::combinat::{binomial, partitions_of, Partition};
use crate::error::{Error, Result};
use crate::ring::{to_integer, QPoly, Rational};
use crate::symfunc::hook_schur;

/// Number of unimodal permutations of one cycle type, and its refinement
/// `Σ_k u_{α,k} q^k` by hook parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCount {
    pub count: u64,
    pub q_refinement: QPoly,
}

/// `u_α` and `u_α(q)` for every partition `α` of `n`, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCountTable {
    n: usize,
    entries: BTreeMap<Partition, CycleCount>,
}

impl CycleCountTable {
    /// Builds a table, checking that the keys are exactly the partitions of
    /// `n` and that each entry is internally consistent.
    pub fn from_entries(n: usize, entries: impl IntoIterator<Item = (Partition, CycleCount)>) -> Result<Self> {
        let entries: BTreeMap<_, _> = entries.into_iter().collect();
        let keys: Vec<_> = entries.keys().cloned().collect();
        if keys != partitions_of(n) {
            return Err(Error::InvalidArgument(format!(
                "table for n = {n} must have one row per partition of {n}"
            )));
        }
        for (alpha, entry) in &entries {
            let q = &entry.q_refinement;
            if !q.has_nonnegative_integer_coeffs() || q.degree().is_some_and(|d| d + 1 > n) {
                return Err(Error::InvalidArgument(format!("bad q-refinement {q} for {alpha}")));
            }
            if q.eval(&Rational::one()) != Rational::from_integer(entry.count.into()) {
                return Err(Error::RouteDisagreement {
                    quantity: format!("u_{alpha}"),
                    detail: format!("count {} but q-refinement {q} at q=1", entry.count),
                });
            }
        }
        Ok(CycleCountTable { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &BTreeMap<Partition, CycleCount> {
        &self.entries
    }

    pub fn get(&self, alpha: &Partition) -> Option<&CycleCount> {
        self.entries.get(alpha)
    }

    /// `Σ_α u_α`; equals `2^{n-1}` for a correct table.
    pub fn total(&self) -> u64 {
        self.entries.values().map(|e| e.count).sum()
    }

    /// `Σ_α u_{α,k}` for each `k`; equals `C(n-1, k)` for a correct table.
    pub fn hook_totals(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.n];
        for e in self.entries.values() {
            for (k, c) in e.q_refinement.coeffs().iter().enumerate() {
                out[k] += to_integer(c).and_then(|v| u64::try_from(v).ok()).unwrap_or(0);
            }
        }
        out
    }

    /// Checks `Σ u_α = 2^{n-1}` and the per-hook binomial totals.
    pub fn check_totals(&self) -> Result<()> {
        let n = self.n;
        if n == 0 {
            return Ok(());
        }
        if self.total() != 1u64 << (n - 1) {
            return Err(Error::RouteDisagreement {
                quantity: format!("|U_{n}|"),
                detail: format!("table total {} != 2^{}", self.total(), n - 1),
            });
        }
        for (k, &t) in self.hook_totals().iter().enumerate() {
            if binomial(n - 1, k) != t.into() {
                return Err(Error::RouteDisagreement {
                    quantity: format!("hook totals for n = {n}"),
                    detail: format!("k = {k}: {t} != C({}, {k})", n - 1),
                });
            }
        }
        Ok(())
    }
}

/// The table computed from symmetric functions: `u_α(q)` by hook scalar
/// products, with each count cross-checked against `½ L_α(1-q)|_{q=-1}`.
pub fn cycle_count_table(n: usize) -> Result<CycleCountTable> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let hooks = (0..n).map(|k| hook_schur(n, k, n)).collect::<Result<Vec<_>>>()?;
    let mut entries = Vec::new();
    for alpha in partitions_of(n) {
        let q = u_alpha_q_with_hooks(&alpha, &hooks)?;
        let count = to_integer(&q.eval(&Rational::one())).expect("integer coefficients");
        let by_spec = u_alpha_via_specialization(&alpha)?;
        if count != by_spec {
            return Err(Error::RouteDisagreement {
                quantity: format!("u_{alpha}"),
                detail: format!("hook route {count}, specialization route {by_spec}"),
            });
        }
        let count = u64::try_from(count).map_err(|_| Error::InvalidArgument("count overflow".into()))?;
        entries.push((alpha, CycleCount { count, q_refinement: q }));
    }
    let table = CycleCountTable::from_entries(n, entries)?;
    table.check_totals()?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_for_three() {
        let t = cycle_count_table(3).unwrap();
        let counts: Vec<_> = t.entries().iter().map(|(a, e)| (a.to_string(), e.count)).collect();
        assert_eq!(
            counts,
            vec![("(3)".to_string(), 1), ("(2,1)".to_string(), 2), ("(1,1,1)".to_string(), 1)]
        );
        assert_eq!(t.total(), 4);
        assert_eq!(t.hook_totals(), vec![1, 2, 1]);
    }

    #[test]
    fn from_entries_rejects_inconsistent_rows() {
        let alpha = Partition::new(vec![1]).unwrap();
        let bad = CycleCount { count: 2, q_refinement: QPoly::one() };
        assert!(CycleCountTable::from_entries(1, [(alpha.clone(), bad)]).is_err());
        assert!(CycleCountTable::from_entries(2, [(alpha, CycleCount { count: 1, q_refinement: QPoly::one() })]).is_err());
    }
}

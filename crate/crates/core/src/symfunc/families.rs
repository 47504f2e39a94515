//! The named families: complete homogeneous `h_n`, Witt functions `ℓ_n`,
//! their plethystic products `L_α`, and ribbon Schur functions `r_I`.

use num_bigint::BigInt;

use super::{plethysm, SymSeries};
use crate::combinat::{divisors, mobius, partitions_of, Composition, Partition};
use crate::error::{Error, Result};
use crate::ring::{Coeff, Rational};

fn check_weight(weight: usize, truncation: usize) -> Result<()> {
    if weight > truncation {
        return Err(Error::ExceedsTruncation { weight, truncation });
    }
    Ok(())
}

/// `h_n = Σ_{α ⊢ n} p_α / z_α`.
pub fn complete_h(n: usize, truncation: usize) -> Result<SymSeries<Rational>> {
    check_weight(n, truncation)?;
    Ok(SymSeries::from_terms(
        partitions_of(n).into_iter().map(|a| {
            let z = a.z_value();
            (a, Rational::new(BigInt::from(1), z))
        }),
        truncation,
    ))
}

/// `ℓ_n = (1/n) Σ_{d | n} μ(d) p_d^{n/d}`.
pub fn witt_ell(n: usize, truncation: usize) -> Result<SymSeries<Rational>> {
    if n == 0 {
        return Err(Error::InvalidArgument("ℓ_0 is undefined".into()));
    }
    check_weight(n, truncation)?;
    let mut terms = Vec::new();
    for d in divisors(n) {
        let mu = mobius(d as u64)?;
        if mu != 0 {
            terms.push((
                Partition::rectangle(d, n / d),
                Rational::new(BigInt::from(mu), BigInt::from(n)),
            ));
        }
    }
    Ok(SymSeries::from_terms(terms, truncation))
}

/// `L_α = Π_i (h_{a_i} ∘ ℓ_i)`, where `a_i` is the multiplicity of `i` in `α`.
pub fn witt_product(alpha: &Partition, truncation: usize) -> Result<SymSeries<Rational>> {
    check_weight(alpha.weight(), truncation)?;
    let mut out = SymSeries::one(truncation);
    for (part, mult) in alpha.multiplicities() {
        let factor = plethysm(&complete_h(mult, truncation)?, &witt_ell(part, truncation)?)?;
        out = out.mul(&factor)?;
    }
    Ok(out)
}

/// Determinant of an upper Hessenberg matrix (zero below the subdiagonal)
/// by expansion along the last column of each leading minor.
///
/// No division is performed, so this works over any coefficient ring.
pub fn upper_hessenberg_determinant<C: Coeff>(matrix: &[Vec<SymSeries<C>>], truncation: usize) -> Result<SymSeries<C>> {
    let m = matrix.len();
    let mut minors: Vec<SymSeries<C>> = Vec::with_capacity(m + 1);
    minors.push(SymSeries::one(truncation));
    for k in 1..=m {
        let mut acc = SymSeries::zero(truncation);
        let mut sub = SymSeries::one(truncation);
        for j in (1..=k).rev() {
            let term = matrix[j - 1][k - 1].mul(&sub)?.mul(&minors[j - 1])?;
            acc = if (k - j) % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
            if j > 1 {
                sub = sub.mul(&matrix[j - 1][j - 2])?;
            }
        }
        minors.push(acc);
    }
    Ok(minors.pop().expect("at least the empty minor"))
}

/// The ribbon Schur function `r_I` as the determinant whose `(i, j)` entry is
/// `h_{i_i + ... + i_j}` on and above the diagonal, 1 on the subdiagonal and
/// 0 below.
pub fn ribbon(composition: &Composition, truncation: usize) -> Result<SymSeries<Rational>> {
    check_weight(composition.size(), truncation)?;
    let parts = composition.parts();
    let m = parts.len();
    let mut matrix = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = Vec::with_capacity(m);
        for j in 0..m {
            let entry = if j + 1 == i {
                SymSeries::one(truncation)
            } else if j >= i {
                complete_h(parts[i..=j].iter().sum(), truncation)?
            } else {
                SymSeries::zero(truncation)
            };
            row.push(entry);
        }
        matrix.push(row);
    }
    upper_hessenberg_determinant(&matrix, truncation)
}

/// `r_I` via `r_{(I', a, b)} = r_{(I', a)} h_b - r_{(I', a + b)}`.
pub fn ribbon_by_recurrence(composition: &Composition, truncation: usize) -> Result<SymSeries<Rational>> {
    check_weight(composition.size(), truncation)?;
    let parts = composition.parts();
    match parts.len() {
        0 => Ok(SymSeries::one(truncation)),
        1 => complete_h(parts[0], truncation),
        m => {
            let last = parts[m - 1];
            let head = Composition::new(parts[..m - 1].to_vec())?;
            let mut merged_parts = parts[..m - 1].to_vec();
            merged_parts[m - 2] += last;
            let merged = Composition::new(merged_parts)?;
            ribbon_by_recurrence(&head, truncation)?
                .mul(&complete_h(last, truncation)?)?
                .sub(&ribbon_by_recurrence(&merged, truncation)?)
        }
    }
}

/// The hook Schur function `s_{(n-k, 1^k)}`, i.e. the ribbon of the hook.
pub fn hook_schur(n: usize, k: usize, truncation: usize) -> Result<SymSeries<Rational>> {
    ribbon(&Composition::hook(n, k)?, truncation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn series(terms: &[(&[usize], i64, i64)], n: usize) -> SymSeries<Rational> {
        SymSeries::from_terms(terms.iter().map(|(a, num, den)| (p(a), rat(*num, *den))), n)
    }

    #[test]
    fn complete_homogeneous() {
        assert_eq!(complete_h(0, 3).unwrap(), SymSeries::one(3));
        assert_eq!(complete_h(2, 3).unwrap(), series(&[(&[1, 1], 1, 2), (&[2], 1, 2)], 3));
        assert_eq!(
            complete_h(3, 3).unwrap(),
            series(&[(&[1, 1, 1], 1, 6), (&[2, 1], 1, 2), (&[3], 1, 3)], 3)
        );
        assert!(complete_h(4, 3).is_err());
    }

    #[test]
    fn witt_functions() {
        assert_eq!(witt_ell(1, 4).unwrap(), SymSeries::power_sum(1, 4).unwrap());
        assert_eq!(witt_ell(2, 4).unwrap(), series(&[(&[1, 1], 1, 2), (&[2], -1, 2)], 4));
        assert_eq!(witt_ell(4, 4).unwrap(), series(&[(&[1, 1, 1, 1], 1, 4), (&[2, 2], -1, 4)], 4));
        assert!(witt_ell(0, 4).is_err());
        assert!(witt_ell(5, 4).is_err());
    }

    #[test]
    fn witt_products() {
        assert_eq!(witt_product(&p(&[1]), 3).unwrap(), SymSeries::power_sum(1, 3).unwrap());
        for n in 1..=6 {
            assert_eq!(witt_product(&p(&[n]), 6).unwrap(), witt_ell(n, 6).unwrap());
        }
        assert_eq!(witt_product(&p(&[1, 1]), 2).unwrap(), complete_h(2, 2).unwrap());
        assert_eq!(witt_product(&Partition::empty(), 2).unwrap(), SymSeries::one(2));
        assert!(witt_product(&p(&[2, 2]), 3).is_err());
    }

    #[test]
    fn ribbons() {
        let c = |v: &[usize]| Composition::new(v.to_vec()).unwrap();
        assert_eq!(ribbon(&c(&[3]), 3).unwrap(), complete_h(3, 3).unwrap());
        assert_eq!(ribbon(&c(&[1, 1]), 2).unwrap(), series(&[(&[1, 1], 1, 2), (&[2], -1, 2)], 2));
        assert_eq!(
            ribbon(&c(&[2, 1]), 3).unwrap(),
            series(&[(&[1, 1, 1], 1, 3), (&[3], -1, 3)], 3)
        );
        assert!(ribbon(&c(&[2, 2]), 3).is_err());
    }

    #[test]
    fn hooks() {
        assert_eq!(hook_schur(4, 0, 4).unwrap(), complete_h(4, 4).unwrap());
        assert_eq!(hook_schur(2, 1, 2).unwrap(), series(&[(&[1, 1], 1, 2), (&[2], -1, 2)], 2));
        assert_eq!(
            hook_schur(3, 1, 3).unwrap(),
            series(&[(&[1, 1, 1], 1, 3), (&[3], -1, 3)], 3)
        );
        assert!(hook_schur(3, 3, 3).is_err());
    }

    /// Leibniz expansion over all permutations, as an independent check of
    /// the Hessenberg evaluation.
    fn leibniz(matrix: &[Vec<SymSeries<Rational>>], n: usize) -> SymSeries<Rational> {
        let m = matrix.len();
        let mut total = SymSeries::zero(n);
        for perm in crate::combinat::Permutation::all(m) {
            let mut term = SymSeries::one(n);
            for (i, &j) in perm.word().iter().enumerate() {
                term = term.mul(&matrix[i][j - 1]).unwrap();
            }
            let inversions = (0..m)
                .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
                .filter(|&(i, j)| perm.word()[i] > perm.word()[j])
                .count();
            total = if inversions % 2 == 0 { total.add(&term) } else { total.sub(&term) }.unwrap();
        }
        total
    }

    #[test]
    fn hessenberg_matches_leibniz() {
        let n = 7;
        for comp in Composition::all(6) {
            let parts = comp.parts();
            let m = parts.len();
            let matrix: Vec<Vec<_>> = (0..m)
                .map(|i| {
                    (0..m)
                        .map(|j| {
                            if j + 1 == i {
                                SymSeries::one(n)
                            } else if j >= i {
                                complete_h(parts[i..=j].iter().sum(), n).unwrap()
                            } else {
                                SymSeries::zero(n)
                            }
                        })
                        .collect()
                })
                .collect();
            assert_eq!(upper_hessenberg_determinant(&matrix, n).unwrap(), leibniz(&matrix, n), "{comp}");
        }
    }
}

use std::collections::BTreeMap;

use super::SymSeries;
use crate::ring::{Coeff, QPoly, Rational};

/// Substitutions of the power sums by polynomials in one variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Specialization {
    /// `p_d -> 1 - q^d`, the alphabet `1 - q`.
    OneMinusQ,
    /// `p_d -> t^d`, the alphabet `{t}`.
    PowersOfT,
    /// `p_d -> 1 + q^d`, the alphabet `1 + q`.
    OnePlusQ,
}

impl Specialization {
    pub fn power_sum_image(self, d: usize) -> QPoly {
        match self {
            Specialization::OneMinusQ => QPoly::one_minus_power(d),
            Specialization::PowersOfT => QPoly::monomial(Rational::from_integer(1.into()), d),
            Specialization::OnePlusQ => QPoly::one_plus_power(d),
        }
    }
}

/// Evaluates `f` under `rule`, expanding exactly.
pub fn specialize(f: &SymSeries<Rational>, rule: Specialization) -> QPoly {
    let mut images: BTreeMap<usize, QPoly> = BTreeMap::new();
    let mut total = QPoly::zero();
    for (alpha, c) in f.terms() {
        let mut term = QPoly::constant(c.clone());
        for &d in alpha.parts() {
            let image = images.entry(d).or_insert_with(|| rule.power_sum_image(d));
            term = &term * image;
        }
        total = total + term;
    }
    total
}

/// The dilation `f(X) -> f((1 - q) X)`: each `p_α` is multiplied by
/// `Π_i (1 - q^{α_i})`.
pub fn scale_alphabet_one_minus_q(f: &SymSeries<Rational>) -> SymSeries<QPoly> {
    SymSeries::from_terms(
        f.terms().iter().map(|(alpha, c)| {
            let factor = alpha
                .parts()
                .iter()
                .fold(QPoly::constant(c.clone()), |acc, &d| acc * QPoly::one_minus_power(d));
            (alpha.clone(), factor)
        }),
        f.truncation(),
    )
}

/// The Hall scalar product, `⟨p_α, p_β⟩ = z_α δ_{αβ}`.
pub fn scalar_product<C: Coeff>(f: &SymSeries<C>, g: &SymSeries<C>) -> C {
    let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    let mut acc = C::zero();
    for (alpha, a) in small.terms() {
        if let Some(b) = large.terms().get(alpha) {
            let z = Rational::from_integer(alpha.z_value());
            acc = acc.plus(&a.times(b).scale(&z));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{partitions_of, Partition};
    use crate::ring::{int, rat};
    use crate::symfunc::{complete_h, hook_schur, witt_ell, witt_product};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn witt_at_one_minus_q() {
        assert_eq!(specialize(&witt_ell(2, 2).unwrap(), Specialization::OneMinusQ), QPoly::from_ints(&[0, -1, 1]));
        assert_eq!(
            specialize(&witt_ell(4, 4).unwrap(), Specialization::OneMinusQ),
            QPoly::from_ints(&[0, -1, 2, -1])
        );
    }

    #[test]
    fn h_at_t_counts_partitions() {
        for n in 0..=8 {
            let poly = specialize(&complete_h(n, n).unwrap(), Specialization::PowersOfT);
            // oracle: Σ_{α ⊢ n} 1/z_α, summed directly
            let direct: Rational = partitions_of(n)
                .iter()
                .map(|a| Rational::new(1.into(), a.z_value()))
                .sum();
            assert_eq!(poly, QPoly::monomial(direct, n));
            assert_eq!(poly.eval(&int(1)), int(1));
        }
    }

    #[test]
    fn h_at_one_plus_q() {
        // h_2(1 + q) = 1 + q + q^2
        assert_eq!(
            specialize(&complete_h(2, 2).unwrap(), Specialization::OnePlusQ),
            QPoly::from_ints(&[1, 1, 1])
        );
    }

    #[test]
    fn dilation_by_one_minus_q() {
        let n = 3;
        let f = SymSeries::from_terms([(p(&[1]), rat(1, 1)), (p(&[2, 1]), rat(1, 1))], n);
        let g = scale_alphabet_one_minus_q(&f);
        assert_eq!(g.coeff(&p(&[1])), QPoly::from_ints(&[1, -1]));
        assert_eq!(g.coeff(&p(&[2, 1])), QPoly::from_ints(&[1, -1, -1, 1]));
    }

    #[test]
    fn dilated_h2_is_signed_hook_sum() {
        let lhs = scale_alphabet_one_minus_q(&complete_h(2, 2).unwrap());
        let s2 = hook_schur(2, 0, 2).unwrap().lift::<QPoly>();
        let s11 = hook_schur(2, 1, 2).unwrap().lift::<QPoly>();
        let rhs = s2
            .sub(&s11.scale_by(&QPoly::var()))
            .unwrap()
            .scale_by(&QPoly::from_ints(&[1, -1]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn scalar_products() {
        for n in 1..=8 {
            let pn = SymSeries::<Rational>::power_sum(n, n).unwrap();
            assert_eq!(scalar_product(&pn, &pn), int(n as i64));
            let h = complete_h(n, n).unwrap();
            assert_eq!(scalar_product(&h, &h), int(1));
        }
        let count = scalar_product(&hook_schur(3, 1, 3).unwrap(), &witt_product(&p(&[2, 1]), 3).unwrap());
        assert_eq!(count, int(1));
    }

    #[test]
    fn power_sums_are_orthogonal() {
        for n in 0..=8 {
            for a in partitions_of(n) {
                let fa = SymSeries::<Rational>::monomial(a.clone(), int(1), 8).unwrap();
                for m in 0..=8 {
                    for b in partitions_of(m) {
                        let fb = SymSeries::<Rational>::monomial(b.clone(), int(1), 8).unwrap();
                        let want = if a == b { Rational::from_integer(a.z_value()) } else { int(0) };
                        assert_eq!(scalar_product(&fa, &fb), want);
                    }
                }
            }
        }
    }
}

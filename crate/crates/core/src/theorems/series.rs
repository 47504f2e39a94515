use num_bigint::BigInt;
use num_traits::One;

use super::c_value;
use crate::combinat::{divisors, partitions_of, Partition};
use crate::error::{Error, Result};
use crate::ring::{to_integer, QPoly, Rational};
use crate::symfunc::{specialize, witt_ell, witt_product, Specialization, SymSeries};

fn require_positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(format!("{what} must be at least 1")));
    }
    Ok(())
}

fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `Σ_k 2 c_k Σ_{j odd} p_k^j / j`, the logarithm of
/// `Π_k ((1 + p_k)/(1 - p_k))^{c_k}`, truncated at `n`.
pub fn theorem1_log(n: usize) -> Result<SymSeries<Rational>> {
    require_positive(n, "truncation degree")?;
    let mut terms = Vec::new();
    for k in 1..=n {
        let twice_c = Rational::from_integer(c_value(k)? * 2);
        for j in (1..=n / k).step_by(2) {
            terms.push((Partition::rectangle(k, j), &twice_c * ratio(1, j)));
        }
    }
    Ok(SymSeries::from_terms(terms, n))
}

/// The cycle enumerator `1 + 2 Σ_α u_α p_α`, expanded as the exponential of
/// [`theorem1_log`].
pub fn theorem1_series(n: usize) -> Result<SymSeries<Rational>> {
    theorem1_log(n)?.exp()
}

/// The cycle enumerator as `Σ_{α odd} 2^{l(α)} L_α`, over partitions with
/// only odd parts.
pub fn theorem1_series_via_l(n: usize) -> Result<SymSeries<Rational>> {
    require_positive(n, "truncation degree")?;
    let mut out = SymSeries::zero(n);
    for w in 0..=n {
        for alpha in partitions_of(w).into_iter().filter(Partition::all_odd) {
            let weight = Rational::from_integer(BigInt::one() << alpha.length());
            out = out.add(&witt_product(&alpha, n)?.scale(&weight))?;
        }
    }
    Ok(out)
}

/// `ℓ_n(1 - q) = Σ_k a_{nk} q^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittSpecialization {
    n: usize,
    poly: QPoly,
}

impl WittSpecialization {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &QPoly {
        &self.poly
    }

    /// `a_{nk}`.
    pub fn a(&self, k: usize) -> BigInt {
        to_integer(&self.poly.coeff(k)).expect("checked integral on construction")
    }

    /// `[a_{n0}, a_{n1}, ...]` up to the degree of `ℓ_n(1 - q)`.
    pub fn coefficients(&self) -> Vec<BigInt> {
        self.poly.integer_coeffs().expect("checked integral on construction")
    }
}

pub fn witt_specialization(n: usize) -> Result<WittSpecialization> {
    require_positive(n, "n")?;
    let poly = specialize(&witt_ell(n, n)?, Specialization::OneMinusQ);
    if poly.integer_coeffs().is_none() {
        return Err(Error::NonIntegral(format!("ℓ_{n}(1-q) = {poly}")));
    }
    Ok(WittSpecialization { n, poly })
}

/// `𝓛(1-q, X) = Π_n Π_k (1 - q^k p_n)^{-a_{nk}}`, truncated at `n`.
///
/// Taking logarithms, the factor for `(n, k)` contributes
/// `a_{nk} Σ_m q^{km} p_n^m / m`, so the coefficient of `p_n^m` in the
/// logarithm is `ℓ_n(1 - q^m) / m`. No truncation in `q` is applied.
pub fn theoremq_series(n: usize) -> Result<SymSeries<QPoly>> {
    require_positive(n, "truncation degree")?;
    let mut log_terms = Vec::new();
    for part in 1..=n {
        let witt = witt_specialization(part)?;
        for m in 1..=n / part {
            let coeff = witt.poly().compose_power(m).scale(&ratio(1, m));
            log_terms.push((Partition::rectangle(part, m), coeff));
        }
    }
    SymSeries::from_terms(log_terms, n).exp()
}

/// `Σ_α u_α(q) p_α` recovered from [`theoremq_series`]: each nonconstant
/// coefficient `L_α(1-q)` is divided by `1 - q`, then `q -> -q`.
pub fn u_q_series_from_theoremq(n: usize) -> Result<SymSeries<QPoly>> {
    let series = theoremq_series(n)?;
    let mut terms = Vec::new();
    for (alpha, c) in series.terms() {
        if alpha.is_empty() {
            continue;
        }
        let quotient = c
            .div_one_minus_var()
            .ok_or_else(|| Error::NonIntegral(format!("L_{alpha}(1-q) = {c} is not divisible by 1-q")))?;
        terms.push((alpha.clone(), quotient.rescale_var(&-Rational::one())));
    }
    Ok(SymSeries::from_terms(terms, n))
}

/// `log((1 + t^k)/(1 - t^k))^c = 2c Σ_{j odd} t^{kj}/j`, up to `t^n`.
fn odd_log(k: usize, c: &BigInt, n: usize) -> QPoly {
    let twice_c = Rational::from_integer(c * 2);
    (1..=n / k)
        .step_by(2)
        .fold(QPoly::zero(), |acc, j| acc + QPoly::monomial(&twice_c * ratio(1, j), k * j))
}

/// Halves `F - 1` and checks that the result has integer coefficients.
fn half_minus_one(f: QPoly, what: &str) -> Result<QPoly> {
    let out = (f - QPoly::one()).scale(&ratio(1, 2));
    if out.integer_coeffs().is_none() {
        return Err(Error::NonIntegral(format!("{what}: {out}")));
    }
    Ok(out)
}

/// `Σ_n u_n^{(k)} t^n` from `1 + 2 Σ u_n^{(k)} t^n = ((1-t^k)/(1+t^k))^{c_k} / (1-2t)`.
pub fn no_k_cycle_series(k: usize, n: usize) -> Result<QPoly> {
    require_positive(k, "k")?;
    require_positive(n, "truncation degree")?;
    let geometric = (1..=n).fold(QPoly::zero(), |acc, m| {
        acc + QPoly::monomial(Rational::from_integer(BigInt::one() << m) * ratio(1, m), m)
    });
    let log = geometric - odd_log(k, &c_value(k)?, n);
    let f = log.exp_truncated(n).expect("zero constant term");
    half_minus_one(f, &format!("u_n^({k})"))
}

/// `Σ_n v_n^{(m)} t^n` from `1 + 2 Σ v_n^{(m)} t^n = Π_{d | m} ((1+t^d)/(1-t^d))^{c_d}`.
pub fn order_divides_series(m: usize, n: usize) -> Result<QPoly> {
    require_positive(m, "m")?;
    require_positive(n, "truncation degree")?;
    let mut log = QPoly::zero();
    for d in divisors(m) {
        log = log + odd_log(d, &c_value(d)?, n);
    }
    let f = log.exp_truncated(n).expect("zero constant term");
    half_minus_one(f, &format!("v_n^({m})"))
}

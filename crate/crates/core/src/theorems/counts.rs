use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combinat::{divisors, mobius, Partition};
use crate::error::{Error, Result};
use crate::ring::{to_integer, QPoly, Rational};
use crate::symfunc::{
    hook_schur, scalar_product, specialize, witt_product, Specialization, SymSeries,
};

/// `c_n = (1/n) Σ_{d | n, d odd} μ(d) 2^{n/d - 1}`, the number of unimodal
/// `n`-cycles.
pub fn c_value(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument("c_n needs n >= 1".into()));
    }
    let mut sum = BigInt::zero();
    for d in divisors(n).into_iter().filter(|d| d % 2 == 1) {
        let mu = mobius(d as u64)?;
        sum += BigInt::from(mu) * (BigInt::one() << (n / d - 1));
    }
    let (q, r) = sum.div_rem(&BigInt::from(n));
    if !r.is_zero() {
        return Err(Error::NonIntegral(format!("c_{n} = {sum}/{n}")));
    }
    Ok(q)
}

fn require_nonempty(alpha: &Partition) -> Result<usize> {
    match alpha.weight() {
        0 => Err(Error::InvalidArgument("cycle type must have positive weight".into())),
        n => Ok(n),
    }
}

/// `u_α(q) = Σ_k ⟨s_{(n-k,1^k)}, L_α⟩ q^k` with precomputed hooks
/// `hooks[k] = s_{(n-k,1^k)}` truncated at `n`.
pub fn u_alpha_q_with_hooks(alpha: &Partition, hooks: &[SymSeries<Rational>]) -> Result<QPoly> {
    let n = require_nonempty(alpha)?;
    if hooks.len() != n {
        return Err(Error::LengthMismatch { left: hooks.len(), right: n });
    }
    let l = witt_product(alpha, n)?;
    let coeffs: Vec<Rational> = hooks.iter().map(|h| scalar_product(h, &l)).collect();
    let poly = QPoly::from_coeffs(coeffs);
    if !poly.has_nonnegative_integer_coeffs() {
        return Err(Error::NonIntegral(format!("u_{alpha}(q) = {poly}")));
    }
    Ok(poly)
}

/// Refinement of `u_α` by the hook parameter `k` (the maximum sits at
/// position `n - k`).
pub fn u_alpha_q(alpha: &Partition) -> Result<QPoly> {
    let n = require_nonempty(alpha)?;
    let hooks = (0..n).map(|k| hook_schur(n, k, n)).collect::<Result<Vec<_>>>()?;
    u_alpha_q_with_hooks(alpha, &hooks)
}

/// `½ L_α(1 - q)` at `q = -1`.
pub fn u_alpha_via_specialization(alpha: &Partition) -> Result<BigInt> {
    let n = require_nonempty(alpha)?;
    let at_minus_one = specialize(&witt_product(alpha, n)?, Specialization::OneMinusQ)
        .eval(&-Rational::one());
    let half = at_minus_one.clone() / Rational::from_integer(2.into());
    to_integer(&half).ok_or_else(|| Error::NonIntegral(format!("L_{alpha}(2)/2 = {at_minus_one}/2")))
}

/// Number of unimodal permutations of cycle type `α`, computed as
/// `u_α(1)` and as `½ L_α(1 - q)|_{q=-1}`; the two must agree.
pub fn u_alpha(alpha: &Partition) -> Result<BigInt> {
    let by_hooks = u_alpha_q(alpha)?.eval(&Rational::one());
    let by_hooks = to_integer(&by_hooks).ok_or_else(|| Error::NonIntegral(format!("u_{alpha}(1)")))?;
    let by_spec = u_alpha_via_specialization(alpha)?;
    if by_hooks != by_spec {
        return Err(Error::RouteDisagreement {
            quantity: format!("u_{alpha}"),
            detail: format!("hook scalar products give {by_hooks}, L_α(1-q) at q=-1 gives {by_spec}"),
        });
    }
    Ok(by_hooks)
}

/// `⟨p_n, L_α⟩`, the signed count `Σ (-1)^k` over unimodal permutations of
/// type `α`. Nonzero only for rectangles `(d^m)`, where it is `μ(d)`.
pub fn bl_sum(alpha: &Partition) -> Result<BigInt> {
    let n = require_nonempty(alpha)?;
    let pn = SymSeries::power_sum(n, n)?;
    let value = scalar_product(&pn, &witt_product(alpha, n)?);
    to_integer(&value).ok_or_else(|| Error::NonIntegral(format!("<p_{n}, L_{alpha}> = {value}")))
}

/// `μ(d)` for `α = (d^m)`, zero otherwise.
pub fn bl_closed_form(alpha: &Partition) -> Result<BigInt> {
    match alpha.multiplicities().as_slice() {
        [(d, _)] => Ok(BigInt::from(mobius(*d as u64)?)),
        _ => Ok(BigInt::zero()),
    }
}

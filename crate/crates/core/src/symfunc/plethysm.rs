use super::SymSeries;
use crate::error::{Error, Result};
use num_traits::Zero;

use crate::ring::{Coeff, Rational};

/// `p_j ∘ f`: every `p_d` in `f` becomes `p_{jd}`; coefficients are left
/// untouched. Terms pushed above the truncation degree are dropped.
pub fn adams<C: Coeff>(f: &SymSeries<C>, j: usize) -> SymSeries<C> {
    assert!(j > 0, "p_0 is not a power sum");
    SymSeries::from_terms(
        f.terms().iter().map(|(a, c)| (a.scaled(j), c.clone())),
        f.truncation(),
    )
}

/// The plethysm `g ∘ f` for rational `g` and `f`.
///
/// Expands `g = Σ g_β p_β` and substitutes `p_β ∘ f = Π_i (p_{β_i} ∘ f)`.
pub fn plethysm(g: &SymSeries<Rational>, f: &SymSeries<Rational>) -> Result<SymSeries<Rational>> {
    if g.truncation() != f.truncation() {
        return Err(Error::TruncationMismatch {
            left: g.truncation(),
            right: f.truncation(),
        });
    }
    let n = f.truncation();
    // lowest weight in f bounds which p_β can contribute below the cut
    let min_weight = f.terms().keys().map(|a| a.weight()).filter(|&w| w > 0).min();
    let has_constant = !f.constant_term().is_zero();
    let mut cache: Vec<Option<SymSeries<Rational>>> = vec![None; n + 1];
    let mut out = SymSeries::zero(n);
    for (beta, gc) in g.terms() {
        if !has_constant {
            match min_weight {
                Some(m) if beta.weight() * m > n => continue,
                None if !beta.is_empty() => continue,
                _ => {}
            }
        }
        let mut term = SymSeries::constant(gc.clone(), n);
        for &j in beta.parts() {
            let factor = cache[j].get_or_insert_with(|| adams(f, j));
            term = term.mul(factor)?;
            if term.is_zero() {
                break;
            }
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

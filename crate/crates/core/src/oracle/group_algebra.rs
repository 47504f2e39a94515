//! The product `U_n(x) U_n(y)` in the group algebra of `S_n`, where
//! `U_n(q) = Σ_σ q^{k(σ)} σ` over unimodal `σ` of shape `(n-k, 1^k)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use super::{check_cap, unimodal_iter};
use crate::combinat::{Composition, Permutation};
use crate::error::{Error, Result};
use crate::ring::{Rational, XyPoly};

/// Largest `n` for the full pair-product convolution.
pub const PRODUCT_CAP: usize = 7;

/// How the product `σ · τ` of two group elements is formed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductOrientation {
    /// `σ · τ = σ ∘ τ`: apply `τ` first.
    RightToLeft,
    /// `σ · τ = τ ∘ σ`: apply `σ` first.
    LeftToRight,
}

/// The orientation under which the product coefficients follow the
/// closed form in [`kreweras_coefficient`]; `RightToLeft` does not.
pub const PRODUCT_ORIENTATION: ProductOrientation = ProductOrientation::LeftToRight;

impl ProductOrientation {
    pub fn multiply(self, sigma: &Permutation, tau: &Permutation) -> Result<Permutation> {
        match self {
            ProductOrientation::RightToLeft => sigma.compose(tau),
            ProductOrientation::LeftToRight => tau.compose(sigma),
        }
    }
}

/// A finite sum `Σ c_σ σ` over `S_n` with coefficients in `ℚ[x, y]`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, XyPoly>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, sigma: Permutation, c: XyPoly) -> Result<()> {
        if sigma.len() != self.n {
            return Err(Error::LengthMismatch { left: self.n, right: sigma.len() });
        }
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry(sigma.clone()).or_insert_with(XyPoly::zero);
        *slot = slot.plus(&c);
        if slot.is_zero() {
            self.terms.remove(&sigma);
        }
        Ok(())
    }

    /// Adds every term of `other` (for merging partial tallies).
    pub fn merge(&mut self, other: GroupAlgebraElement) -> Result<()> {
        for (s, c) in other.terms {
            self.add_term(s, c)?;
        }
        Ok(())
    }

    pub fn coeff(&self, sigma: &Permutation) -> XyPoly {
        self.terms.get(sigma).cloned().unwrap_or_else(XyPoly::zero)
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, XyPoly> {
        &self.terms
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// `U_n(x) U_n(y)` under the pinned [`PRODUCT_ORIENTATION`].
pub fn unimodal_product(n: usize) -> Result<GroupAlgebraElement> {
    unimodal_product_oriented(n, PRODUCT_ORIENTATION)
}

pub fn unimodal_product_oriented(n: usize, orientation: ProductOrientation) -> Result<GroupAlgebraElement> {
    check_cap(n)?;
    if n > PRODUCT_CAP {
        return Err(Error::CapExceeded { n, cap: PRODUCT_CAP });
    }
    let factors: Vec<_> = unimodal_iter(n)?.collect();
    let mut out = GroupAlgebraElement::zero(n);
    for s in &factors {
        for t in &factors {
            let weight = XyPoly::monomial(Rational::one(), s.k() as u32, t.k() as u32);
            out.add_term(orientation.multiply(s.permutation(), t.permutation())?, weight)?;
        }
    }
    Ok(out)
}

/// Shape classes that receive a nonzero coefficient in `U_n(x) U_n(y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductShape {
    /// `(n-r, 1^r)`.
    Unimodal { r: usize },
    /// `(n-r-s-t, 1^t, s, 1^r)` with `s >= 2`.
    Bimodal { r: usize, s: usize, t: usize },
    Other,
}

/// Hooks are matched first; a bimodal shape needs exactly one part `s >= 2`
/// after the first part, so the two classes never overlap.
pub fn classify_product_shape(shape: &Composition) -> ProductShape {
    if let Some(r) = shape.hook_leg() {
        return ProductShape::Unimodal { r };
    }
    let rest = &shape.parts()[1..];
    let big: Vec<usize> = (0..rest.len()).filter(|&i| rest[i] >= 2).collect();
    match big.as_slice() {
        [i] => ProductShape::Bimodal {
            r: rest.len() - i - 1,
            s: rest[*i],
            t: *i,
        },
        _ => ProductShape::Other,
    }
}

fn xy(dx: usize, dy: usize) -> XyPoly {
    XyPoly::monomial(Rational::one(), dx as u32, dy as u32)
}

/// `[m]_{xy} = 1 + xy + ... + (xy)^{m-1}`.
fn xy_integer(m: usize) -> XyPoly {
    (0..m).fold(XyPoly::zero(), |acc, i| acc.plus(&xy(i, i)))
}

/// `y^r [r+1]_{x/y} = Σ_{i=0}^{r} x^i y^{r-i}`.
fn homogeneous_sum(r: usize) -> XyPoly {
    (0..=r).fold(XyPoly::zero(), |acc, i| acc.plus(&xy(i, r - i)))
}

fn bimodal_term(r: usize, s: usize, t: usize) -> XyPoly {
    xy(r + s - 1, t + s - 1).times(&XyPoly::y().plus(&XyPoly::one()))
}

/// Closed form for the coefficient of `σ` in `U_n(x) U_n(y)`:
///
/// * `y^r [r+1]_{x/y} + x^{r+1} y [n-r-1]_{xy}` for shape `(n-r, 1^r)`,
/// * `x^{r+s-1} y^{t+s-1} (y+1)` for shape `(n-r-s-t, 1^t, s, 1^r)`, `s >= 2`,
/// * `0` otherwise.
///
/// At `x = y = 1` the unimodal case gives `n`, so each unimodal permutation
/// has exactly `n` factorizations into two unimodal ones.
pub fn kreweras_coefficient(sigma: &Permutation) -> XyPoly {
    let n = sigma.len();
    match classify_product_shape(&sigma.descent_composition()) {
        ProductShape::Unimodal { r } => homogeneous_sum(r).plus(&xy(r + 1, 1).times(&xy_integer(n - r - 1))),
        ProductShape::Bimodal { r, s, t } => bimodal_term(r, s, t),
        ProductShape::Other => XyPoly::zero(),
    }
}

/// The same closed form with the hook term written as
/// `y^r [r+1]_{x/y} + x^{r+1} [n-r-1]_{xy}` (no factor `y`). It disagrees
/// with the convolution already at `n = 2`; kept to report the difference.
pub fn kreweras_coefficient_as_printed(sigma: &Permutation) -> XyPoly {
    let n = sigma.len();
    match classify_product_shape(&sigma.descent_composition()) {
        ProductShape::Unimodal { r } => homogeneous_sum(r).plus(&xy(r + 1, 0).times(&xy_integer(n - r - 1))),
        ProductShape::Bimodal { r, s, t } => bimodal_term(r, s, t),
        ProductShape::Other => XyPoly::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn shape_classes() {
        assert_eq!(classify_product_shape(&comp(&[5])), ProductShape::Unimodal { r: 0 });
        assert_eq!(classify_product_shape(&comp(&[1, 1, 1])), ProductShape::Unimodal { r: 2 });
        assert_eq!(classify_product_shape(&comp(&[2, 2])), ProductShape::Bimodal { r: 0, s: 2, t: 0 });
        assert_eq!(
            classify_product_shape(&comp(&[1, 1, 3, 1])),
            ProductShape::Bimodal { r: 1, s: 3, t: 1 }
        );
        assert_eq!(classify_product_shape(&comp(&[1, 2, 1, 2])), ProductShape::Other);
    }

    #[test]
    fn tiny_products() {
        let one = unimodal_product(1).unwrap();
        assert_eq!(one.terms().len(), 1);
        assert_eq!(one.coeff(&perm("1")), XyPoly::one());

        let two = unimodal_product(2).unwrap();
        assert_eq!(two.coeff(&perm("12")), XyPoly::one().plus(&xy(1, 1)));
        assert_eq!(two.coeff(&perm("21")), XyPoly::x().plus(&XyPoly::y()));
    }

    #[test]
    fn closed_form_instances() {
        // identity: 1 + xy [n-1]_{xy}
        let id = Permutation::identity(4);
        assert_eq!(kreweras_coefficient(&id), xy_integer(4));
        assert_eq!(kreweras_coefficient(&perm("21")), XyPoly::x().plus(&XyPoly::y()));
        assert_eq!(kreweras_coefficient(&perm("2413")), xy(1, 1).times(&XyPoly::y().plus(&XyPoly::one())));
        let other = Permutation::new(vec![6, 1, 5, 3, 2, 4]).unwrap();
        assert_eq!(other.descent_composition(), comp(&[1, 2, 1, 2]));
        assert!(kreweras_coefficient(&other).is_zero());
    }

    #[test]
    fn printed_hook_term_fails_at_n_two() {
        let two = unimodal_product(2).unwrap();
        assert_ne!(two.coeff(&perm("12")), kreweras_coefficient_as_printed(&perm("12")));
        assert_eq!(kreweras_coefficient_as_printed(&perm("12")), XyPoly::one().plus(&XyPoly::x()));
    }

    #[test]
    fn orientation_is_pinned() {
        // Only left-to-right products follow the closed form.
        for n in 1..=5 {
            let ltr = unimodal_product_oriented(n, ProductOrientation::LeftToRight).unwrap();
            assert!(Permutation::all(n).iter().all(|s| ltr.coeff(s) == kreweras_coefficient(s)));
        }
        let rtl = unimodal_product_oriented(3, ProductOrientation::RightToLeft).unwrap();
        assert!(Permutation::all(3).iter().any(|s| rtl.coeff(s) != kreweras_coefficient(s)));
        assert_eq!(PRODUCT_ORIENTATION, ProductOrientation::LeftToRight);
    }

    #[test]
    fn factorization_counts() {
        for n in 1..=5 {
            let prod = unimodal_product(n).unwrap();
            for w in unimodal_iter(n).unwrap() {
                assert_eq!(prod.coeff(w.permutation()).eval(&int(1), &int(1)), int(n as i64));
            }
        }
        assert!(matches!(unimodal_product(8), Err(Error::CapExceeded { .. })));
    }
}

use std::collections::BTreeMap;
use std::fmt;

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::ring::{Coeff, Rational};

#[derive(Clone, PartialEq)]
pub struct SymSeries<C> {
    truncation: usize,
    terms: BTreeMap<Partition, C>,
}

fn accumulate<C: Coeff>(terms: &mut BTreeMap<Partition, C>, key: Partition, c: C) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&key) {
        Some(slot) => {
            let sum = slot.plus(&c);
            if sum.is_zero() {
                terms.remove(&key);
            } else {
                *slot = sum;
            }
        }
        None => {
            terms.insert(key, c);
        }
    }
}

impl<C: Coeff> SymSeries<C> {
    pub fn zero(truncation: usize) -> Self {
        SymSeries {
            truncation,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(truncation: usize) -> Self {
        Self::constant(C::one(), truncation)
    }

    pub fn constant(c: C, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        accumulate(&mut s.terms, Partition::empty(), c);
        s
    }

    /// `c * p_alpha`; fails if `|alpha|` exceeds the truncation degree.
    pub fn monomial(alpha: Partition, c: C, truncation: usize) -> Result<Self> {
        if alpha.weight() > truncation {
            return Err(Error::ExceedsTruncation {
                weight: alpha.weight(),
                truncation,
            });
        }
        let mut s = Self::zero(truncation);
        accumulate(&mut s.terms, alpha, c);
        Ok(s)
    }

    /// The power sum `p_k`.
    pub fn power_sum(k: usize, truncation: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("p_0 is not a power sum".into()));
        }
        Self::monomial(Partition::rectangle(k, 1), C::one(), truncation)
    }

    /// Builds a series from arbitrary terms, dropping zero coefficients and
    /// anything above the truncation degree.
    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, C)>, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        for (alpha, c) in terms {
            if alpha.weight() <= truncation {
                accumulate(&mut s.terms, alpha, c);
            }
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &Partition) -> C {
        self.terms.get(alpha).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Partition::empty())
    }

    /// Same terms, explicitly re-truncated at `truncation`.
    pub fn retruncate(&self, truncation: usize) -> Self {
        Self::from_terms(self.terms.clone(), truncation)
    }

    /// The terms of weight exactly `w`.
    pub fn homogeneous_part(&self, w: usize) -> Self {
        SymSeries {
            truncation: self.truncation,
            terms: self
                .terms
                .iter()
                .filter(|(a, _)| a.weight() == w)
                .map(|(a, c)| (a.clone(), c.clone()))
                .collect(),
        }
    }

    fn check_truncation(&self, other: &Self) -> Result<()> {
        if self.truncation != other.truncation {
            return Err(Error::TruncationMismatch {
                left: self.truncation,
                right: other.truncation,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_truncation(other)?;
        let mut out = self.clone();
        for (a, c) in &other.terms {
            accumulate(&mut out.terms, a.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.negate())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }

    pub fn scale_by(&self, k: &C) -> Self {
        self.map_coeffs(|c| c.times(k))
    }

    /// Product, dropping every term of weight above the truncation degree.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_truncation(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.truncation;
        let mut out = Self::zero(n);
        for (a, ca) in &self.terms {
            let wa = a.weight();
            for (b, cb) in &other.terms {
                if wa + b.weight() <= n {
                    accumulate(&mut out.terms, a.union(b), ca.times(cb));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.truncation);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SymSeries<D> {
        SymSeries::from_terms(
            self.terms.iter().map(|(a, c)| (a.clone(), f(c))),
            self.truncation,
        )
    }

    /// Homogeneous components indexed by weight `0..=N`.
    fn components(&self) -> Vec<Self> {
        let mut parts = vec![Self::zero(self.truncation); self.truncation + 1];
        for (a, c) in &self.terms {
            parts[a.weight()].terms.insert(a.clone(), c.clone());
        }
        parts
    }

    /// Truncated exponential; the constant term must vanish.
    ///
    /// With `D` the operator multiplying weight-`w` terms by `w`,
    /// `D(exp f) = exp f * D f` gives each component of the result from
    /// the lower ones.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::ConstantTerm("exp needs a zero constant term"));
        }
        let n = self.truncation;
        let f = self.components();
        let mut e: Vec<Self> = Vec::with_capacity(n + 1);
        e.push(Self::one(n));
        for w in 1..=n {
            let mut acc = Self::zero(n);
            for j in 1..=w {
                if f[j].is_zero() || e[w - j].is_zero() {
                    continue;
                }
                let term = f[j].mul_unchecked(&e[w - j]).scale(&Rational::from_integer(j.into()));
                acc = acc.add(&term)?;
            }
            e.push(acc.scale(&Rational::new(1.into(), w.into())));
        }
        Ok(Self::sum_components(e, n))
    }

    /// Truncated logarithm; the constant term must be one.
    pub fn log(&self) -> Result<Self> {
        if self.constant_term() != C::one() {
            return Err(Error::ConstantTerm("log needs constant term 1"));
        }
        let n = self.truncation;
        let g = self.components();
        let mut l: Vec<Self> = vec![Self::zero(n)];
        for w in 1..=n {
            let mut acc = Self::zero(n);
            for j in 1..w {
                if l[j].is_zero() || g[w - j].is_zero() {
                    continue;
                }
                let term = l[j].mul_unchecked(&g[w - j]).scale(&Rational::from_integer(j.into()));
                acc = acc.add(&term)?;
            }
            let lw = g[w].sub(&acc.scale(&Rational::new(1.into(), w.into())))?;
            l.push(lw);
        }
        Ok(Self::sum_components(l, n))
    }

    fn sum_components(parts: Vec<Self>, n: usize) -> Self {
        let mut out = Self::zero(n);
        for p in parts {
            out.terms.extend(p.terms);
        }
        out
    }
}

impl SymSeries<Rational> {
    /// Embeds a rational series into another coefficient ring.
    pub fn lift<D: Coeff>(&self) -> SymSeries<D> {
        self.map_coeffs(|c| D::from_rational(c.clone()))
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for SymSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 + O({})", self.truncation + 1);
        }
        for (i, (a, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if a.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*p{a}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for SymSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymSeries")
            .field("truncation", &self.truncation)
            .field("terms", &self.terms)
            .finish()
    }
}

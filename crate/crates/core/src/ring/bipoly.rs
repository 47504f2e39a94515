//! Sparse polynomials in two variables `x`, `y` over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Signed, Zero};

use super::{Coeff, Rational};

/// A bivariate polynomial; keys are `(deg_x, deg_y)`, zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct XyPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl XyPoly {
    pub fn zero() -> Self {
        XyPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn monomial(c: Rational, dx: u32, dy: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(dx, dy, c);
        p
    }

    pub fn add_term(&mut self, dx: u32, dy: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((dx, dy)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(dx, dy));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> Rational {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, ((i, j), c)| {
            acc + c * num_traits::pow(x.clone(), *i as usize) * num_traits::pow(y.clone(), *j as usize)
        })
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn times(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.times(self))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, c * r);
        }
        out
    }
}

impl Add for XyPoly {
    type Output = XyPoly;
    fn add(self, rhs: XyPoly) -> XyPoly {
        self.plus(&rhs)
    }
}

impl Mul for XyPoly {
    type Output = XyPoly;
    fn mul(self, rhs: XyPoly) -> XyPoly {
        self.times(&rhs)
    }
}

impl Zero for XyPoly {
    fn zero() -> Self {
        XyPoly::zero()
    }
    fn is_zero(&self) -> bool {
        XyPoly::is_zero(self)
    }
}

impl One for XyPoly {
    fn one() -> Self {
        XyPoly::one()
    }
}

impl Coeff for XyPoly {
    fn plus(&self, rhs: &Self) -> Self {
        XyPoly::plus(self, rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        XyPoly::times(self, rhs)
    }
    fn negate(&self) -> Self {
        self.scale(&-Rational::one())
    }
    fn scale(&self, r: &Rational) -> Self {
        XyPoly::scale(self, r)
    }
    fn from_rational(r: Rational) -> Self {
        Self::monomial(r, 0, 0)
    }
}

impl fmt::Display for XyPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, ((i, j), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            if !abs.is_one() || (*i == 0 && *j == 0) {
                factors.push(abs.to_string());
            }
            for (var, e) in [("x", *i), ("y", *j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for XyPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn products_and_cancellation() {
        let s = XyPoly::x().plus(&XyPoly::y());
        let d = XyPoly::x().plus(&XyPoly::y().scale(&rat(-1, 1)));
        let p = s.times(&d);
        assert_eq!(p.coeff(1, 1), rat(0, 1));
        assert_eq!(p.coeff(2, 0), rat(1, 1));
        assert_eq!(p.coeff(0, 2), rat(-1, 1));
        assert_eq!(p.terms().count(), 2);
        assert_eq!(s.pow(2).eval(&rat(1, 1), &rat(1, 1)), rat(4, 1));
        assert_eq!(p.to_string(), "-y^2 + x^2");
    }
}

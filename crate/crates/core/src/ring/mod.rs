//! Exact coefficient rings: rationals and polynomials over them.

mod bipoly;
mod poly;

pub use bipoly::XyPoly;
pub use poly::QPoly;

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// A commutative ring containing the rationals, used as the coefficient
/// ring of symmetric-function series.
pub trait Coeff: Clone + PartialEq + Debug + Zero + One {
    fn plus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    fn from_rational(r: Rational) -> Self;

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }
}

impl Coeff for Rational {
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
}

/// The integer value of `r`, or `None` if it has a nontrivial denominator.
pub fn to_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

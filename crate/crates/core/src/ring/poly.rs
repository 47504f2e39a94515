//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Coeff, Rational};

/// A polynomial in one formal variable (written `q` or `t`).
///
/// `coeffs[i]` is the coefficient of the `i`-th power. The vector never ends
/// in a zero, so the zero polynomial is the empty vector and equality is
/// structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        QPoly { coeffs: vec![c] }.trim()
    }

    pub fn var() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        QPoly { coeffs }.trim()
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        QPoly { coeffs }.trim()
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// `1 - v^d`.
    pub fn one_minus_power(d: usize) -> Self {
        Self::one() - Self::monomial(Rational::one(), d)
    }

    /// `1 + v^d`.
    pub fn one_plus_power(d: usize) -> Self {
        Self::one() + Self::monomial(Rational::one(), d)
    }

    /// `[m]_v = 1 + v + ... + v^{m-1}`; zero for `m = 0`.
    pub fn q_integer(m: usize) -> Self {
        Self::from_coeffs(vec![Rational::one(); m])
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * v + c)
    }

    /// Substitutes `v -> c * v`.
    pub fn rescale_var(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pow);
            pow = &pow * c;
        }
        Self::from_coeffs(out)
    }

    /// Substitutes `v -> v^m`.
    pub fn compose_power(&self, m: usize) -> Self {
        assert!(m > 0);
        let Some(deg) = self.degree() else {
            return Self::zero();
        };
        let mut out = vec![Rational::zero(); deg * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * m] = c.clone();
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * r).collect())
    }

    /// Drops every power above `n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(n + 1).cloned().collect())
    }

    pub fn mul_truncated(&self, rhs: &Self, n: usize) -> Self {
        let mut out = vec![Rational::zero(); (n + 1).min(self.coeffs.len() + rhs.coeffs.len())];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// `exp(self) mod v^{n+1}`; requires a zero constant term.
    pub fn exp_truncated(&self, n: usize) -> Option<Self> {
        if !self.coeff(0).is_zero() {
            return None;
        }
        // E' = f' E  =>  k e_k = sum_{j=1}^{k} j f_j e_{k-j}
        let mut e = vec![Rational::zero(); n + 1];
        e[0] = Rational::one();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                let fj = self.coeff(j);
                if !fj.is_zero() {
                    acc += fj * Rational::from_integer(j.into()) * &e[k - j];
                }
            }
            e[k] = acc / Rational::from_integer(k.into());
        }
        Some(Self::from_coeffs(e))
    }

    /// `log(self) mod v^{n+1}`; requires constant term 1.
    pub fn log_truncated(&self, n: usize) -> Option<Self> {
        if !self.coeff(0).is_one() {
            return None;
        }
        // f' = g' / g  =>  k f_k = k g_k - sum_{j=1}^{k-1} j f_j g_{k-j}
        let mut f = vec![Rational::zero(); n + 1];
        for k in 1..=n {
            let kk = Rational::from_integer(k.into());
            let mut acc = self.coeff(k) * &kk;
            for j in 1..k {
                acc -= Rational::from_integer(j.into()) * &f[j] * self.coeff(k - j);
            }
            f[k] = acc / kk;
        }
        Some(Self::from_coeffs(f))
    }

    /// Exact quotient by `1 - v`, or `None` if `1 - v` does not divide.
    pub fn div_one_minus_var(&self) -> Option<Self> {
        // (1 - v) d = c  =>  d_k = c_0 + ... + c_k
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut acc = Rational::zero();
        for c in &self.coeffs {
            acc += c;
            out.push(acc.clone());
        }
        if !acc.is_zero() {
            return None;
        }
        Some(Self::from_coeffs(out))
    }

    /// Coefficients as integers, if they all are.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(super::to_integer).collect()
    }

    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Renders with the given variable name, lowest power first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 || !abs.is_one() {
                s.push_str(&abs.to_string());
                if i > 0 {
                    s.push('*');
                }
            }
            s.push_str(&mono);
        }
        s
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self + &(-rhs)
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Zero for QPoly {
    fn zero() -> Self {
        QPoly::zero()
    }
    fn is_zero(&self) -> bool {
        QPoly::is_zero(self)
    }
}

impl One for QPoly {
    fn one() -> Self {
        QPoly::one()
    }
}

impl Coeff for QPoly {
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self.clone()
    }
    fn scale(&self, r: &Rational) -> Self {
        QPoly::scale(self, r)
    }
    fn from_rational(r: Rational) -> Self {
        QPoly::constant(r)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("q"))
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

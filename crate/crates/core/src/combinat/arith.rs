use num_bigint::BigInt;

use crate::error::{Error, Result};

/// The Möbius function, by trial-division factorization.
pub fn mobius(n: u64) -> Result<i32> {
    if n == 0 {
        return Err(Error::InvalidArgument("mobius(0) is undefined".into()));
    }
    let mut m = n;
    let mut sign = 1;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// Positive divisors of `n` in increasing order. Empty for `n = 0`.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

//! Factorization, Euler's totient and divisor lattices.
//!
//! Inputs are desk-scale (well below 10^12), so trial division is enough.

use std::ops::Deref;

use crate::error::{Error, Result};

/// Canonical prime factorization `n = p_1^b_1 * ... * p_k^b_k` with strictly
/// increasing primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs, primes ascending. Empty for `n = 1`.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Number of positive divisors, `prod (b_r + 1)`.
    pub fn divisor_count(&self) -> usize {
        self.factors.iter().map(|&(_, e)| e as usize + 1).product()
    }

    /// `Some((p, r))` when `n = p^r` with `r >= 1`.
    pub fn prime_power(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    pub fn is_prime(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }
}

/// Sorted list of all positive divisors of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorList {
    n: u64,
    divisors: Vec<u64>,
}

impl DivisorList {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.divisors
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.divisors
    }
}

impl Deref for DivisorList {
    type Target = [u64];

    fn deref(&self) -> &[u64] {
        &self.divisors
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).map(|f| f.is_prime()).unwrap_or(false)
}

/// Euler's totient; `totient(1) = 1`.
pub fn totient(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.factors.iter().fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

/// All positive divisors in ascending order, generated by exponent
/// enumeration over the factorization.
pub fn divisors(n: u64) -> Result<DivisorList> {
    let f = factorize(n)?;
    let mut divisors = vec![1u64];
    for &(p, e) in f.factors() {
        let len = divisors.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divisors.push(divisors[i] * pk);
            }
        }
    }
    divisors.sort_unstable();
    Ok(DivisorList { n, divisors })
}

/// Divisors strictly below `n`.
pub fn proper_divisors(n: u64) -> Result<DivisorList> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if n == 1 {
        return Err(Error::NoProperDivisors(1));
    }
    let mut list = divisors(n)?;
    list.divisors.pop();
    Ok(list)
}

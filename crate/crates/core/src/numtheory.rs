//! Exact arithmetic functions over `u64`: factorization, divisor counts and
//! sums, divisor lists and the 2-adic split `n = 2^r * m`.
//!
//! Every product is checked; an overflow surfaces as [`Error::Overflow`]
//! instead of wrapping.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Prime factorization as `(prime, exponent)` pairs, primes ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    /// Multiplies the prime powers back together.
    pub fn value(&self) -> Result<u64> {
        self.pairs.iter().try_fold(1u64, |acc, &(p, e)| {
            let pe = checked_pow(p, e)?;
            checked_mul(acc, pe)
        })
    }
}

fn nonzero(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroArgument)
    } else {
        Ok(())
    }
}

pub(crate) fn checked_mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::Overflow)
}

/// Trial-division factorization. `factorize(1)` is the empty product.
pub fn factorize(n: u64) -> Result<Factorization> {
    nonzero(n)?;
    let mut pairs = Vec::new();
    let mut rest = n;
    let mut d = 2u64;
    while d <= rest / d {
        if rest.is_multiple_of(d) {
            let mut e = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            pairs.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(Factorization { pairs })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Number of positive divisors.
pub fn tau(n: u64) -> Result<u64> {
    factorize(n)?
        .pairs
        .iter()
        .try_fold(1u64, |acc, &(_, e)| checked_mul(acc, u64::from(e) + 1))
}

/// Sum of positive divisors.
pub fn sigma(n: u64) -> Result<u64> {
    factorize(n)?.pairs.iter().try_fold(1u64, |acc, &(p, e)| {
        // 1 + p + ... + p^e
        let mut term = 1u64;
        let mut sum = 1u64;
        for _ in 0..e {
            term = checked_mul(term, p)?;
            sum = checked_add(sum, term)?;
        }
        checked_mul(acc, sum)
    })
}

/// All positive divisors in strictly ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let fact = factorize(n)?;
    let mut out = vec![1u64];
    for &(p, e) in &fact.pairs {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for &d in &out {
            let mut x = d;
            next.push(x);
            for _ in 0..e {
                x = checked_mul(x, p)?;
                next.push(x);
            }
        }
        out = next;
    }
    out.sort_unstable();
    Ok(out)
}

/// Splits `n = 2^r * m` with `m` odd, returning `(r, m)`.
pub fn split_two_part(n: u64) -> Result<(u32, u64)> {
    nonzero(n)?;
    let r = n.trailing_zeros();
    Ok((r, n >> r))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    checked_mul(a / gcd(a, b), b)
}

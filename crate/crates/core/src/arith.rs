//! Small integer helpers shared across modules.

use crate::error::{Error, Result};

pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm(a: i64, b: i64) -> Result<i64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd(a, b))
        .checked_mul(b)
        .map(i64::abs)
        .ok_or(Error::Overflow("lcm"))
}

/// Deterministic trial division; the primes used by the constructions stay small.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut f = 3i64;
    while f <= n / f {
        if n % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

/// Smallest prime that is at least `from`.
pub fn next_prime(from: i64) -> Result<i64> {
    let mut p = from.max(2);
    while !is_prime(p) {
        p = p.checked_add(1).ok_or(Error::Overflow("prime search"))?;
    }
    Ok(p)
}

pub fn binomial(n: u64, k: u64) -> Result<i64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
        if acc > i64::MAX as i128 {
            return Err(Error::Overflow("binomial coefficient"));
        }
    }
    Ok(acc as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(lcm(6, 10).unwrap(), 30);
        assert!(is_prime(19) && !is_prime(21) && !is_prime(1));
        assert_eq!(next_prime(19).unwrap(), 19);
        assert_eq!(next_prime(20).unwrap(), 23);
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(2, 3).unwrap(), 0);
    }
}

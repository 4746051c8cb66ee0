//! Small integer helpers: primality, factorization, multiplicative orders.

use crate::error::GroupError;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut k = 0;
        while n.is_multiple_of(d) {
            n /= d;
            k += 1;
        }
        if k > 0 {
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Greatest prime dividing `n`.
pub fn largest_prime_divisor(n: u64) -> Result<u64, GroupError> {
    if n < 2 {
        return Err(GroupError::Undefined(n));
    }
    Ok(factorize(n).last().map(|&(p, _)| p).unwrap_or(n))
}

/// Returns `(p, k)` when `n = p^k` with `k >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Least `k >= 1` with `r^k = 1 (mod q)`, or `None` if `r` is not a unit.
pub fn multiplicative_order(r: u64, q: u64) -> Option<u64> {
    if q < 2 || gcd(r % q, q) != 1 {
        return None;
    }
    let r = r % q;
    let mut acc = r;
    let mut k = 1;
    while acc != 1 {
        acc = acc * r % q;
        k += 1;
    }
    Some(k)
}

pub(crate) fn require_prime(p: u64) -> Result<(), GroupError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(GroupError::NotPrime(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn largest_prime_divisor_examples() {
        assert_eq!(largest_prime_divisor(12), Ok(3));
        assert_eq!(largest_prime_divisor(42), Ok(7));
        assert_eq!(largest_prime_divisor(128), Ok(2));
        assert_eq!(largest_prime_divisor(1), Err(GroupError::Undefined(1)));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn orders_mod_q() {
        assert_eq!(multiplicative_order(2, 7), Some(3));
        assert_eq!(multiplicative_order(3, 7), Some(6));
        assert_eq!(multiplicative_order(5, 13), Some(4));
        assert_eq!(multiplicative_order(7, 7), None);
    }
}

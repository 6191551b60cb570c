use alloc::vec::Vec;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n`, ascending, by trial division.
pub fn factor_distinct(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `(p, e)` with `q = p^e`, or `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    let primes = factor_distinct(q);
    if primes.len() != 1 {
        return None;
    }
    let p = primes[0];
    let (mut rest, mut e) = (q, 0u32);
    while rest > 1 {
        rest /= p;
        e += 1;
    }
    Some((p as u32, e))
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % modulus as u128) as u64;
        }
        base = (base as u128 * base as u128 % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Smallest generator of `GF(p)*`. `p` must be prime.
pub fn smallest_primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let n = p - 1;
    let primes = factor_distinct(n);
    (2..p)
        .find(|&g| primes.iter().all(|&r| pow_mod(g, n / r, p) != 1))
        .expect("every prime field has a primitive root")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(125), Some((5, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(0), None);
    }

    #[test]
    fn primes_and_factors() {
        assert!(is_prime(2) && is_prime(7) && is_prime(1_048_573));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(25));
        assert_eq!(factor_distinct(6560), [2, 5, 41]);
        assert_eq!(factor_distinct(2400), [2, 3, 5]);
        assert_eq!(factor_distinct(97), [97]);
    }

    fn brute_order(g: u64, p: u64) -> u64 {
        let mut x = g % p;
        let mut k = 1;
        while x != 1 {
            x = x * g % p;
            k += 1;
        }
        k
    }

    #[test]
    fn primitive_roots_match_brute_force_orders() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            let brute = (1..p).find(|&g| brute_order(g, p) == p - 1).unwrap();
            assert_eq!(smallest_primitive_root(p), brute, "p = {p}");
        }
        assert_eq!(smallest_primitive_root(7), 3);
    }
}

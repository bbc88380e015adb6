//! Small integer helpers: primality, factoring and powers at desk scale.

use alloc::vec::Vec;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
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

pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

/// `base^exp` for exponents known to be small; panics on overflow.
pub fn pow(base: u64, exp: u32) -> u64 {
    base.checked_pow(exp).expect("integer power overflow")
}

pub fn pow_i64(base: i64, exp: u32) -> i64 {
    base.checked_pow(exp).expect("integer power overflow")
}

/// `(-1)^e`.
pub fn neg_one_pow(e: u64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc = 1u128 % m128;
    let mut b = base as u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Legendre symbol `(x / p)` for an odd prime `p`, by Euler's criterion.
pub fn legendre(x: u64, p: u64) -> i8 {
    let x = x % p;
    if x == 0 {
        return 0;
    }
    if mod_pow(x, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_factors() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(prime_factors(728), [2, 7, 13]);
        assert_eq!(prime_factors(80), [2, 5]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(97), [97]);
    }

    #[test]
    fn legendre_small() {
        // squares mod 7: 1, 2, 4
        let symbols: Vec<i8> = (0..7).map(|x| legendre(x, 7)).collect();
        assert_eq!(symbols, [0, 1, 1, -1, 1, -1, -1]);
        assert_eq!(legendre(2, 3), -1);
    }
}

//! Dense polynomials over `F_p`, coefficients low degree first. Only what the
//! irreducibility test needs.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith;

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(x: u64, p: u64) -> u64 {
    arith::mod_pow(x, p - 2, p)
}

/// Remainder of `a` modulo the nonzero polynomial `f`.
fn rem(mut a: Vec<u64>, f: &[u64], p: u64) -> Vec<u64> {
    trim(&mut a);
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p);
    while a.len() > df {
        let top = a.len() - 1;
        let c = a[top] * lead_inv % p;
        if c != 0 {
            let shift = top - df;
            for (j, &fj) in f.iter().enumerate() {
                a[shift + j] = (a[shift + j] + (p - c) * fj % p) % p;
            }
        }
        trim(&mut a);
    }
    a
}

fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj % p) % p;
        }
    }
    rem(out, f, p)
}

fn pow_mod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(vec![1], f, p);
    let mut b = rem(base.to_vec(), f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, f, p);
        }
        b = mul_mod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

fn gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn has_root(f: &[u64], p: u64) -> bool {
    (0..p).any(|x| {
        let mut acc = 0u64;
        for &c in f.iter().rev() {
            acc = (acc * x + c) % p;
        }
        acc == 0
    })
}

/// Rabin's test: `f` of degree `n` is irreducible over `F_p` iff
/// `x^(p^n) = x (mod f)` and `gcd(x^(p^(n/q)) - x, f) = 1` for every prime
/// `q | n`. Small `p` gets a cheap root scan first.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let p = p as u64;
    let f: Vec<u64> = f.iter().map(|&c| c as u64 % p).collect();
    let mut f = f;
    trim(&mut f);
    let n = match f.len() {
        0 | 1 => return false,
        len => len - 1,
    };
    if n == 1 {
        return true;
    }
    if p <= 1 << 16 && has_root(&f, p) {
        return false;
    }
    // frob[k] = x^(p^k) mod f
    let x = vec![0, 1];
    let mut frob = Vec::with_capacity(n + 1);
    frob.push(rem(x.clone(), &f, p));
    for k in 1..=n {
        let next = pow_mod(&frob[k - 1], p, &f, p);
        frob.push(next);
    }
    if frob[n] != rem(x.clone(), &f, p) {
        return false;
    }
    for q in arith::prime_factors(n as u64) {
        let k = n / q as usize;
        let mut diff = frob[k].clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        let g = gcd(f.clone(), diff, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_two_over_f3() {
        assert!(is_irreducible(&[1, 0, 1], 3)); // x^2 + 1
        assert!(!is_irreducible(&[2, 0, 1], 3)); // x^2 - 1
        assert!(is_irreducible(&[2, 1, 1], 3)); // x^2 + x + 2
    }

    #[test]
    fn rootless_but_reducible() {
        // (x^2 + 1)^2 = x^4 + 2x^2 + 1 over F_3 has no roots.
        assert!(!is_irreducible(&[1, 0, 2, 0, 1], 3));
        // (x^2 + 1)(x^2 + x + 2) = x^4 + x^3 + 3x^2 + x + 2 -> x^4 + x^3 + x + 2
        assert!(!is_irreducible(&[2, 1, 0, 1, 1], 3));
    }

    #[test]
    fn counts_monic_irreducibles() {
        // Number of monic irreducibles of degree n over F_p: (1/n) sum_{d|n} mu(d) p^(n/d).
        let expected = [(3u32, 2usize, 3usize), (3, 3, 8), (3, 4, 18), (5, 2, 10), (5, 3, 40)];
        for (p, n, count) in expected {
            let mut found = 0;
            let total = (p as u64).pow(n as u32);
            for idx in 0..total {
                let mut f = Vec::with_capacity(n + 1);
                let mut rest = idx;
                for _ in 0..n {
                    f.push((rest % p as u64) as u32);
                    rest /= p as u64;
                }
                f.push(1);
                if is_irreducible(&f, p) {
                    found += 1;
                }
            }
            assert_eq!(found, count, "p={p} n={n}");
        }
    }
}

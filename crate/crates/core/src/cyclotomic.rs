//! Exact arithmetic in the ring of integers `Z[zeta_p]` of the `p`-th
//! cyclotomic field.
//!
//! Values are kept in the power basis `1, zeta, ..., zeta^(p-2)`, which is a
//! `Z`-basis, so two values are equal iff their coefficient vectors are. All
//! intermediate work happens modulo `x^p - 1` and is folded back with
//! `zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CyclotomicInt {
    p: u32,
    coeffs: Vec<i64>,
}

/// Floating-point value at `zeta_p = exp(2 pi i / p)`, for magnitude checks.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct ComplexApprox {
    pub re: f64,
    pub im: f64,
}

impl ComplexApprox {
    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }
}

impl CyclotomicInt {
    /// From coefficients in the power basis; exactly `p - 1` of them.
    pub fn new(p: u32, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != p as usize - 1 {
            return Err(Error::CoefficientCount { expected: p as usize - 1, got: coeffs.len() });
        }
        Ok(CyclotomicInt { p, coeffs })
    }

    /// From a vector of length `p` in `Z[x] / (x^p - 1)`.
    fn from_wide(p: u32, wide: &[i64]) -> Self {
        let top = wide[p as usize - 1];
        let coeffs = wide[..p as usize - 1].iter().map(|&c| c - top).collect();
        CyclotomicInt { p, coeffs }
    }

    fn wide(&self) -> Vec<i64> {
        let mut w = self.coeffs.clone();
        w.push(0);
        w
    }

    pub fn zero(p: u32) -> Self {
        CyclotomicInt { p, coeffs: vec![0; p as usize - 1] }
    }

    pub fn from_int(p: u32, v: i64) -> Self {
        let mut z = Self::zero(p);
        z.coeffs[0] = v;
        z
    }

    pub fn one(p: u32) -> Self {
        Self::from_int(p, 1)
    }

    /// `zeta^k` for any `k` (reduced mod `p`).
    pub fn zeta_pow(p: u32, k: u64) -> Self {
        Self::monomial(p, k, 1)
    }

    fn monomial(p: u32, k: u64, c: i64) -> Self {
        let mut wide = vec![0i64; p as usize];
        wide[(k % p as u64) as usize] = c;
        Self::from_wide(p, &wide)
    }

    /// `sum_t counts[t] zeta^t`, the usual way a character sum is tallied.
    pub fn from_exponent_counts(p: u32, counts: &[i64]) -> Self {
        let mut wide = vec![0i64; p as usize];
        for (t, &c) in counts.iter().enumerate() {
            wide[t % p as usize] += c;
        }
        Self::from_wide(p, &wide)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The rational integer this value equals, if any.
    pub fn as_integer(&self) -> Option<i64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    fn same_p(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::MismatchedCharacteristic { left: self.p, right: other.p })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_p(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CyclotomicInt { p: self.p, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_p(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CyclotomicInt { p: self.p, coeffs })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_p(other)?;
        let p = self.p as usize;
        let mut wide = vec![0i64; p];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                wide[(i + j) % p] += a * b;
            }
        }
        Ok(Self::from_wide(self.p, &wide))
    }

    pub fn scale(&self, k: i64) -> Self {
        CyclotomicInt { p: self.p, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Multiplies by `zeta^k`.
    pub fn shift(&self, k: u64) -> Self {
        let p = self.p as usize;
        let mut wide = vec![0i64; p];
        let k = (k % p as u64) as usize;
        for (i, &c) in self.wide().iter().enumerate() {
            wide[(i + k) % p] += c;
        }
        Self::from_wide(self.p, &wide)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.p), |acc, _| &acc * self)
    }

    /// Complex conjugation, `zeta -> zeta^(-1)`.
    pub fn conj(&self) -> Self {
        let p = self.p as usize;
        let mut wide = vec![0i64; p];
        for (i, &c) in self.coeffs.iter().enumerate() {
            wide[(p - i) % p] += c;
        }
        Self::from_wide(self.p, &wide)
    }

    pub fn to_complex(&self) -> ComplexApprox {
        let step = 2.0 * core::f64::consts::PI / self.p as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let angle = step * i as f64;
            re += c as f64 * libm::cos(angle);
            im += c as f64 * libm::sin(angle);
        }
        ComplexApprox { re, im }
    }
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;

    /// Panics if the operands live in different cyclotomic rings.
    fn add(self, rhs: Self) -> CyclotomicInt {
        self.try_add(rhs).expect("cyclotomic add")
    }
}

impl Sub for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn sub(self, rhs: Self) -> CyclotomicInt {
        self.try_sub(rhs).expect("cyclotomic sub")
    }
}

impl Mul for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn mul(self, rhs: Self) -> CyclotomicInt {
        self.try_mul(rhs).expect("cyclotomic mul")
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn neg(self) -> CyclotomicInt {
        self.scale(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn root_of_unity_sum() {
        for p in [3u32, 5, 7, 11] {
            let mut s = CyclotomicInt::zero(p);
            for k in 1..p as u64 {
                s = &s + &CyclotomicInt::zeta_pow(p, k);
            }
            assert_eq!(s, CyclotomicInt::from_int(p, -1));
            let z = CyclotomicInt::zeta_pow(p, 1);
            let zinv = CyclotomicInt::zeta_pow(p, p as u64 - 1);
            assert_eq!(&z * &zinv, CyclotomicInt::one(p));
            assert_eq!(z.conj(), zinv);
        }
    }

    #[test]
    fn sqrt_minus_three() {
        let d = &CyclotomicInt::zeta_pow(3, 1) - &CyclotomicInt::zeta_pow(3, 2);
        assert_eq!(&d * &d, CyclotomicInt::from_int(3, -3));
        assert_eq!(d.coeffs(), &[1, 2]); // zeta - zeta^2 = 1 + 2 zeta
    }

    #[test]
    fn mismatched_rings() {
        let a = CyclotomicInt::one(3);
        let b = CyclotomicInt::one(5);
        assert_eq!(a.try_mul(&b).unwrap_err(), Error::MismatchedCharacteristic { left: 3, right: 5 });
        assert!(a.try_add(&b).is_err());
        assert!(CyclotomicInt::new(5, vec![1, 2]).is_err());
    }

    #[test]
    fn integer_support_matches_complex_value() {
        let v = CyclotomicInt::from_int(7, -12);
        let c = v.to_complex();
        assert!((c.re + 12.0).abs() < 1e-12 && c.im.abs() < 1e-12);
        assert_eq!(v.as_integer(), Some(-12));
        assert_eq!(CyclotomicInt::zeta_pow(7, 3).as_integer(), None);
    }

    fn arb(p: u32) -> impl Strategy<Value = CyclotomicInt> {
        proptest::collection::vec(-50i64..50, p as usize - 1).prop_map(move |c| CyclotomicInt::new(p, c).unwrap())
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb(5), b in arb(5), c in arb(5)) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!(a.shift(2), &a * &CyclotomicInt::zeta_pow(5, 2));
            let (x, y, z) = (a.to_complex(), b.to_complex(), (&a * &b).to_complex());
            prop_assert!((z.re - (x.re * y.re - x.im * y.im)).abs() < 1e-6);
            prop_assert!((z.im - (x.re * y.im + x.im * y.re)).abs() < 1e-6);
        }
    }
}

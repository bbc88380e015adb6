//! Arithmetic in `F_p` and `F_{p^n}` for odd primes `p`.
//!
//! Elements of `F_{p^n}` are dense coefficient vectors in the polynomial basis
//! `1, x, ..., x^(n-1)` of `F_p[x] / (f)`. A [`FieldCtx`] owns the modulus and
//! a few precomputed tables (the Frobenius matrix and the traces of the basis);
//! elements are plain `Copy` values that only make sense together with the
//! context that produced them.
//!
//! Enumeration order is the integer order of `sum_i c_i p^i`, so `c_0` varies
//! fastest and the zero element comes first.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use crate::{arith, caps, poly, Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: [u32; MAX_DEGREE],
    len: u8,
}

impl FieldElement {
    fn zero(n: usize) -> Self {
        FieldElement { coeffs: [0; MAX_DEGREE], len: n as u8 }
    }

    /// Coefficients `c_0, ..., c_(n-1)`.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs[..self.len as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs()).finish()
    }
}

/// An element of the prime field `F_p`, stored as its residue in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct PrimeFieldElement(u32);

impl PrimeFieldElement {
    pub const ZERO: PrimeFieldElement = PrimeFieldElement(0);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A concrete finite field `F_{p^n}`.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u32,
    n: usize,
    order: u64,
    modulus: Vec<u32>,
    primitive: FieldElement,
    /// `frob[i] = (x^i)^p`, the columns of the p-power map.
    frob: Vec<FieldElement>,
    /// `Tr(x^i)` for each basis monomial.
    trace_basis: Vec<u32>,
}

/// Builds `F_{p^n}`.
///
/// With no modulus the lexicographically smallest monic irreducible of degree
/// `n` is used, comparing `c_0` first. The primitive element is the first one
/// in enumeration order.
pub fn make_field(p: u64, n: usize, modulus: Option<&[u32]>) -> Result<FieldCtx> {
    if p == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p > u32::MAX as u64 {
        return Err(Error::CharacteristicTooLarge(p));
    }
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    if n > MAX_DEGREE {
        return Err(Error::DegreeTooLarge { degree: n, max: MAX_DEGREE });
    }
    let order = arith::checked_pow(p, n as u32).ok_or(Error::FieldTooLarge)?;
    let p32 = p as u32;
    let modulus = match modulus {
        Some(m) => {
            if m.len() != n + 1 {
                return Err(Error::ModulusDegree { expected: n + 1, got: m.len() });
            }
            if let Some(&c) = m.iter().find(|&&c| c >= p32) {
                return Err(Error::CoefficientRange { value: c as u64, p: p32 });
            }
            if m[n] != 1 {
                return Err(Error::ModulusNotMonic);
            }
            if !poly::is_irreducible(m, p32) {
                return Err(Error::ReducibleModulus);
            }
            m.to_vec()
        }
        None => smallest_irreducible(p32, n),
    };

    let mut ctx = FieldCtx {
        p: p32,
        n,
        order,
        modulus,
        primitive: FieldElement::zero(n),
        frob: Vec::new(),
        trace_basis: Vec::new(),
    };
    ctx.frob = (0..n).map(|i| ctx.pow(ctx.monomial(i), p)).collect();
    ctx.trace_basis = (0..n)
        .map(|i| {
            let mut acc = ctx.zero();
            let mut y = ctx.monomial(i);
            for _ in 0..n {
                acc = ctx.add(acc, y);
                y = ctx.frobenius_once(y);
            }
            debug_assert!(acc.coeffs()[1..].iter().all(|&c| c == 0));
            acc.coeffs[0]
        })
        .collect();
    ctx.primitive = ctx.find_primitive()?;
    Ok(ctx)
}

fn smallest_irreducible(p: u32, n: usize) -> Vec<u32> {
    let total = (p as u64).pow(n as u32);
    let mut f = vec![0u32; n + 1];
    f[n] = 1;
    for idx in 0..total {
        // c_0 is the most significant digit of the candidate index.
        let mut rest = idx;
        for k in (0..n).rev() {
            f[k] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        if poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl FieldCtx {
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Extension degree.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `p^n`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn primitive(&self) -> FieldElement {
        self.primitive
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::zero(self.n)
    }

    pub fn one(&self) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = 1;
        e
    }

    fn monomial(&self, i: usize) -> FieldElement {
        // x^i for i < n is a basis vector; larger powers go through mul.
        if i < self.n {
            let mut e = self.zero();
            if self.n == 1 && i == 0 {
                e.coeffs[0] = 1;
            } else {
                e.coeffs[i] = 1;
            }
            e
        } else {
            let mut x = self.zero();
            x.coeffs[1] = 1;
            self.pow(x, i as u64)
        }
    }

    /// Builds an element from exactly `n` coefficients.
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.n {
            return Err(Error::CoefficientCount { expected: self.n, got: coeffs.len() });
        }
        let mut e = self.zero();
        for (slot, &c) in e.coeffs.iter_mut().zip(coeffs) {
            if c >= self.p as u64 {
                return Err(Error::CoefficientRange { value: c, p: self.p });
            }
            *slot = c as u32;
        }
        Ok(e)
    }

    /// Reduces an integer into `F_p`.
    pub fn fp(&self, v: i64) -> PrimeFieldElement {
        PrimeFieldElement(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn embed(&self, c: PrimeFieldElement) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = c.0;
        e
    }

    /// The prime-field value of `x`, if `x` lies in `F_p`.
    pub fn as_prime(&self, x: FieldElement) -> Option<PrimeFieldElement> {
        if x.coeffs()[1..].iter().all(|&c| c == 0) {
            Some(PrimeFieldElement(x.coeffs[0]))
        } else {
            None
        }
    }

    pub fn element_at(&self, index: u64) -> FieldElement {
        debug_assert!(index < self.order);
        let mut e = self.zero();
        let mut rest = index;
        for c in e.coeffs[..self.n].iter_mut() {
            *c = (rest % self.p as u64) as u32;
            rest /= self.p as u64;
        }
        e
    }

    pub fn index_of(&self, x: FieldElement) -> u64 {
        x.coeffs().iter().rev().fold(0u64, |acc, &c| acc * self.p as u64 + c as u64)
    }

    /// All `p^n` elements in enumeration order, refused above `cap`.
    pub fn enumerate(&self, cap: u64) -> Result<Elements> {
        caps::check(self.order, cap)?;
        Ok(self.elements())
    }

    /// All elements in enumeration order, without a cap check.
    pub fn elements(&self) -> Elements {
        Elements { p: self.p, current: self.zero(), remaining: self.order }
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let mut out = x;
        for (o, &c) in out.coeffs[..self.n].iter_mut().zip(y.coeffs()) {
            let s = *o + c;
            *o = if s >= self.p { s - self.p } else { s };
        }
        out
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        let mut out = x;
        for o in out.coeffs[..self.n].iter_mut() {
            if *o != 0 {
                *o = self.p - *o;
            }
        }
        out
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    /// `c * x` for `c` in `F_p`.
    pub fn scale(&self, c: PrimeFieldElement, x: FieldElement) -> FieldElement {
        let p = self.p as u64;
        let mut out = x;
        for o in out.coeffs[..self.n].iter_mut() {
            *o = (*o as u64 * c.0 as u64 % p) as u32;
        }
        out
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let n = self.n;
        let p = self.p as u64;
        let mut t = [0u64; 2 * MAX_DEGREE];
        for (i, &xi) in x.coeffs().iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.coeffs().iter().enumerate() {
                t[i + j] = (t[i + j] + xi as u64 * yj as u64) % p;
            }
        }
        // x^n = -(m_0 + m_1 x + ... + m_(n-1) x^(n-1))
        for k in (n..2 * n - 1).rev() {
            let c = t[k];
            if c == 0 {
                continue;
            }
            t[k] = 0;
            let neg_c = p - c;
            for (j, &m) in self.modulus[..n].iter().enumerate() {
                t[k - n + j] = (t[k - n + j] + neg_c * m as u64) % p;
            }
        }
        let mut out = self.zero();
        for (o, &c) in out.coeffs[..n].iter_mut().zip(&t[..n]) {
            *o = c as u32;
        }
        out
    }

    pub fn pow(&self, x: FieldElement, mut e: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(x, self.order - 2))
    }

    fn frobenius_once(&self, x: FieldElement) -> FieldElement {
        let p = self.p as u64;
        let mut acc = [0u64; MAX_DEGREE];
        for (&xi, col) in x.coeffs().iter().zip(&self.frob) {
            if xi == 0 {
                continue;
            }
            for (a, &c) in acc[..self.n].iter_mut().zip(col.coeffs()) {
                *a = (*a + xi as u64 * c as u64) % p;
            }
        }
        let mut out = self.zero();
        for (o, &a) in out.coeffs[..self.n].iter_mut().zip(&acc) {
            *o = a as u32;
        }
        out
    }

    /// `x^(p^i)`.
    pub fn frobenius(&self, x: FieldElement, i: u64) -> FieldElement {
        let mut y = x;
        for _ in 0..(i % self.n as u64) {
            y = self.frobenius_once(y);
        }
        y
    }

    /// `x^(p^i + 1)`.
    pub fn frobenius_norm_like(&self, x: FieldElement, i: u64) -> FieldElement {
        self.mul(self.frobenius(x, i), x)
    }

    /// Absolute trace `Tr(x) = sum_(i<n) x^(p^i)`, computed from the traces
    /// of the basis monomials.
    pub fn trace(&self, x: FieldElement) -> PrimeFieldElement {
        PrimeFieldElement(self.dot(&self.trace_basis, x))
    }

    /// Quadratic character extended by `eta(0) = 0`.
    pub fn quadratic_char(&self, x: FieldElement) -> i8 {
        if x.is_zero() {
            return 0;
        }
        if self.pow(x, (self.order - 1) / 2) == self.one() {
            1
        } else {
            -1
        }
    }

    /// `sum_i c_i x_i mod p`.
    pub fn dot(&self, c: &[u32], x: FieldElement) -> u32 {
        let p = self.p as u64;
        let mut acc = 0u64;
        for (&ci, &xi) in c.iter().zip(x.coeffs()) {
            acc = (acc + ci as u64 * xi as u64) % p;
        }
        acc as u32
    }

    /// Coefficients `c` with `Tr(b x) = sum_i c_i x_i` for every `x`.
    pub fn trace_functional(&self, b: FieldElement) -> Vec<u32> {
        (0..self.n).map(|i| self.trace(self.mul(b, self.monomial(i))).0).collect()
    }

    /// Values of the linear functional `x -> sum_i c_i x_i` at every element,
    /// indexed by enumeration index.
    pub fn linear_table(&self, c: &[u32]) -> Vec<u32> {
        let p = self.p as usize;
        let mut table = vec![0u32; self.order as usize];
        let mut block = 1usize;
        for &ck in &c[..self.n] {
            for d in 1..p {
                let shift = (d as u64 * ck as u64 % p as u64) as u32;
                let (head, tail) = table.split_at_mut(d * block);
                for (dst, &src) in tail[..block].iter_mut().zip(&head[..block]) {
                    let s = src + shift;
                    *dst = if s >= self.p { s - self.p } else { s };
                }
            }
            block *= p;
        }
        table
    }

    /// `Tr(b x)` for every `x`, indexed by enumeration index.
    pub fn trace_row(&self, b: FieldElement) -> Vec<u32> {
        self.linear_table(&self.trace_functional(b))
    }

    fn find_primitive(&self) -> Result<FieldElement> {
        let group = self.order - 1;
        let cofactors: Vec<u64> = arith::prime_factors(group).iter().map(|q| group / q).collect();
        let one = self.one();
        self.elements()
            .skip(1)
            .find(|&g| cofactors.iter().all(|&e| self.pow(g, e) != one))
            .ok_or(Error::NoPrimitiveElement)
    }

    pub fn fp_add(&self, a: PrimeFieldElement, b: PrimeFieldElement) -> PrimeFieldElement {
        PrimeFieldElement(((a.0 as u64 + b.0 as u64) % self.p as u64) as u32)
    }

    pub fn fp_sub(&self, a: PrimeFieldElement, b: PrimeFieldElement) -> PrimeFieldElement {
        PrimeFieldElement(((a.0 as u64 + self.p as u64 - b.0 as u64) % self.p as u64) as u32)
    }

    pub fn fp_mul(&self, a: PrimeFieldElement, b: PrimeFieldElement) -> PrimeFieldElement {
        PrimeFieldElement((a.0 as u64 * b.0 as u64 % self.p as u64) as u32)
    }

    pub fn fp_neg(&self, a: PrimeFieldElement) -> PrimeFieldElement {
        self.fp_sub(PrimeFieldElement::ZERO, a)
    }

    /// Quadratic character of `F_p` (the Legendre symbol).
    pub fn prime_quadratic_char(&self, a: PrimeFieldElement) -> i8 {
        arith::legendre(a.0 as u64, self.p as u64)
    }

    /// Parses the `c0,c1,...,c(n-1)` element encoding.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let coeffs = parse_coefficients(s)?;
        self.element(&coeffs)
    }

    pub fn parse_prime(&self, s: &str) -> Result<PrimeFieldElement> {
        let v: u64 = s.trim().parse().map_err(|_| Error::Parse(alloc::format!("invalid F_p value {s:?}")))?;
        if v >= self.p as u64 {
            return Err(Error::CoefficientRange { value: v, p: self.p });
        }
        Ok(PrimeFieldElement(v as u32))
    }

    pub fn format_element(&self, x: FieldElement) -> String {
        join(x.coeffs())
    }

    pub fn format_modulus(&self) -> String {
        join(&self.modulus)
    }
}

fn join(coeffs: &[u32]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{c}");
    }
    out
}

/// Parses a comma-separated coefficient list (element or modulus encoding).
pub fn parse_coefficients(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(alloc::format!("invalid coefficient {part:?} in {s:?}")))
        })
        .collect()
}

/// Parses the modulus encoding `m0,m1,...,mn` (last coefficient 1).
pub fn parse_modulus(s: &str) -> Result<Vec<u32>> {
    parse_coefficients(s)?
        .into_iter()
        .map(|c| u32::try_from(c).map_err(|_| Error::Parse(alloc::format!("coefficient {c} too large"))))
        .collect()
}

/// Iterator over every field element in enumeration order.
#[derive(Debug, Clone)]
pub struct Elements {
    p: u32,
    current: FieldElement,
    remaining: u64,
}

impl Iterator for Elements {
    type Item = FieldElement;

    fn next(&mut self) -> Option<FieldElement> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = self.current;
        let len = self.current.len as usize;
        for c in self.current.coeffs[..len].iter_mut() {
            *c += 1;
            if *c < self.p {
                break;
            }
            *c = 0;
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, Some(r))
    }
}

impl ExactSizeIterator for Elements {}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f9() -> FieldCtx {
        make_field(3, 2, Some(&[1, 0, 1])).unwrap()
    }

    #[test]
    fn prime_field_f3() {
        let f = make_field(3, 1, None).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        let all: Vec<_> = f.elements().map(|e| e.coeffs()[0]).collect();
        assert_eq!(all, [0, 1, 2]);
        assert_eq!(f.primitive().coeffs(), &[2]);
        assert_eq!(f.quadratic_char(f.element(&[2]).unwrap()), -1);
        assert_eq!(f.quadratic_char(f.one()), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(make_field(9, 1, None).unwrap_err(), Error::NotPrime(9));
        assert_eq!(make_field(2, 3, None).unwrap_err(), Error::EvenCharacteristic);
        assert_eq!(make_field(3, 0, None).unwrap_err(), Error::ZeroDegree);
        // x^2 + 2 = (x - 1)(x + 1) over F_3
        assert_eq!(make_field(3, 2, Some(&[2, 0, 1])).unwrap_err(), Error::ReducibleModulus);
        assert_eq!(make_field(3, 2, Some(&[1, 0, 2])).unwrap_err(), Error::ModulusNotMonic);
        assert!(matches!(make_field(3, 2, Some(&[1, 1])), Err(Error::ModulusDegree { expected: 3, got: 2 })));
        assert!(make_field(3, 2, Some(&[1, 0, 1])).is_ok());
    }

    #[test]
    fn default_moduli() {
        assert_eq!(make_field(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
        // x^3 + 1 and x^3 + x^2 + 1 have the root 2 resp. 1 over F_3.
        assert_eq!(make_field(3, 3, None).unwrap().modulus(), &[1, 0, 2, 1]);
        // x^2 + 1 = (x - 2)(x + 2) over F_5; x^2 + x + 1 has discriminant 2, a non-residue.
        assert_eq!(make_field(5, 2, None).unwrap().modulus(), &[1, 1, 1]);
    }

    #[test]
    fn f9_hand_values() {
        let f = f9();
        let alpha = f.element(&[0, 1]).unwrap();
        assert_eq!(f.mul(alpha, alpha), f.element(&[2, 0]).unwrap());
        assert_eq!(f.frobenius(alpha, 1), f.element(&[0, 2]).unwrap());
        assert_eq!(f.trace(alpha).value(), 0);
        assert_eq!(f.trace(f.one()).value(), 2);
        assert_eq!(f.inv(f.one()).unwrap(), f.one());
        assert_eq!(f.inv(f.zero()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn primitive_element_order() {
        for (p, n) in [(3, 1), (3, 2), (3, 4), (5, 2), (7, 2), (3, 5)] {
            let f = make_field(p, n, None).unwrap();
            let g = f.primitive();
            let q = f.order();
            assert_eq!(f.pow(g, q - 1), f.one());
            assert_eq!(f.quadratic_char(g), -1);
            assert_eq!(f.quadratic_char(f.mul(g, g)), 1);
            for r in arith::prime_factors(q - 1) {
                assert_ne!(f.pow(g, (q - 1) / r), f.one());
            }
        }
    }

    #[test]
    fn enumeration_is_a_bijection_onto_indices() {
        let f = make_field(3, 3, None).unwrap();
        let all: Vec<_> = f.enumerate(1000).unwrap().collect();
        assert_eq!(all.len(), 27);
        assert!(all[0].is_zero());
        for (i, e) in all.iter().enumerate() {
            assert_eq!(f.index_of(*e), i as u64);
            assert_eq!(f.element_at(i as u64), *e);
        }
        assert_eq!(f.enumerate(26).unwrap_err(), Error::CapExceeded { size: 27, cap: 26 });
    }

    #[test]
    fn trace_fibers_and_linearity() {
        for (p, n) in [(3, 4), (5, 3), (7, 2), (3, 8)] {
            let f = make_field(p, n, None).unwrap();
            let mut fiber = vec![0u64; p as usize];
            for x in f.elements() {
                let t = f.trace(x);
                fiber[t.value() as usize] += 1;
                // Tr(x^p) = Tr(x) and the trace agrees with the definition.
                assert_eq!(f.trace(f.frobenius(x, 1)), t);
            }
            assert!(fiber.iter().all(|&c| c == f.order() / p));
        }
        let f = make_field(3, 4, None).unwrap();
        for x in f.elements().step_by(7) {
            let mut acc = f.zero();
            for i in 0..4 {
                acc = f.add(acc, f.frobenius(x, i));
            }
            assert_eq!(f.as_prime(acc), Some(f.trace(x)));
        }
    }

    #[test]
    fn quadratic_character_restriction() {
        for (p, n) in [(3, 1), (3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2), (7, 3)] {
            let f = make_field(p, n, None).unwrap();
            let squares = f.elements().filter(|&x| f.quadratic_char(x) == 1).count() as u64;
            assert_eq!(squares, (f.order() - 1) / 2);
            for c in 1..p as i64 {
                let c = f.fp(c);
                let expected = if n % 2 == 0 { 1 } else { f.prime_quadratic_char(c) };
                assert_eq!(f.quadratic_char(f.embed(c)), expected, "p={p} n={n} c={c}");
            }
        }
    }

    #[test]
    fn trace_rows_match_direct_trace() {
        let f = make_field(5, 3, None).unwrap();
        for b in f.elements().step_by(11) {
            let row = f.trace_row(b);
            for (i, x) in f.elements().enumerate() {
                assert_eq!(row[i], f.trace(f.mul(b, x)).value());
            }
        }
    }

    #[test]
    fn encodings() {
        let f = f9();
        let x = f.parse_element("1,2").unwrap();
        assert_eq!(f.format_element(x), "1,2");
        assert_eq!(f.format_modulus(), "1,0,1");
        assert!(matches!(f.parse_element("1"), Err(Error::CoefficientCount { .. })));
        assert!(matches!(f.parse_element("1,3"), Err(Error::CoefficientRange { .. })));
        assert!(matches!(f.parse_element("1,x"), Err(Error::Parse(_))));
        assert_eq!(parse_modulus("1,0,1").unwrap(), [1, 0, 1]);
    }

    fn arb_pair() -> impl Strategy<Value = (u64, u64, u64)> {
        (0u64..2187, 0u64..2187, 0u64..2187)
    }

    proptest! {
        #[test]
        fn field_axioms((a, b, c) in arb_pair()) {
            let f = make_field(3, 7, None).unwrap();
            let (x, y, z) = (f.element_at(a), f.element_at(b), f.element_at(c));
            prop_assert_eq!(f.mul(x, y), f.mul(y, x));
            prop_assert_eq!(f.add(x, y), f.add(y, x));
            prop_assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
            prop_assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
            prop_assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
            prop_assert!(f.add(x, f.neg(x)).is_zero());
            if !x.is_zero() {
                prop_assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
            }
            // p-power map is a ring homomorphism
            prop_assert_eq!(f.frobenius(f.add(x, y), 1), f.add(f.frobenius(x, 1), f.frobenius(y, 1)));
            prop_assert_eq!(f.frobenius(f.mul(x, y), 1), f.mul(f.frobenius(x, 1), f.frobenius(y, 1)));
            prop_assert_eq!(f.frobenius(x, 1), f.pow(x, 3));
            prop_assert_eq!(f.frobenius(x, 7), x);
            prop_assert_eq!(f.frobenius(x, 0), x);
            // trace is F_p-linear
            let k = f.fp(c as i64);
            prop_assert_eq!(
                f.trace(f.add(f.scale(k, x), y)),
                f.fp_add(f.fp_mul(k, f.trace(x)), f.trace(y))
            );
            // quadratic character is multiplicative
            prop_assert_eq!(f.quadratic_char(f.mul(x, y)), f.quadratic_char(x) * f.quadratic_char(y));
        }
    }
}

//! Character sums over `F_{p^h}` with values in `Z[zeta_p]`.
//!
//! The special Weil sum is
//!
//! ```text
//! S(a, b) = sum_{x in F_{p^h}} zeta_p^Tr(a x^(p^u + 1) + b x),   a != 0
//! ```
//!
//! [`weil_sum_bruteforce`] adds up the terms; [`weil_sum_closed`] evaluates it
//! from the structure of the linearized map `X -> a^(p^u) X^(p^(2u)) + a X`
//! (with `v = gcd(h, u)`):
//!
//! - `b = 0`: `G_h eta(a)` when `h/v` is odd, otherwise `+-p^s` or `+-p^(s+v)`
//!   (`s = h/2`) depending on whether `a^((p^h-1)/(p^v+1)) = (-1)^(s/v)`.
//! - map bijective: the `b = 0` value times `zeta^Tr(-a x0^(p^u+1))`, where
//!   `x0` solves `a^(p^u) X^(p^(2u)) + a X = -b^(p^u)`.
//! - map singular: `-(-1)^(s/v) p^(s+v) zeta^Tr(-a x0^(p^u+1))` if that
//!   equation has a solution, `0` otherwise.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::cyclotomic::CyclotomicInt;
use crate::field::{FieldCtx, FieldElement};
use crate::linalg::LinearSystem;
use crate::{Error, Result};

/// `chi_b(x) = zeta_p^Tr(b x)`.
pub fn additive_char(ctx: &FieldCtx, b: FieldElement, x: FieldElement) -> CyclotomicInt {
    CyclotomicInt::zeta_pow(ctx.p(), ctx.trace(ctx.mul(b, x)).value() as u64)
}

/// `G_h = sum_x eta(x) chi_1(x)` by direct summation.
pub fn gauss_sum_bruteforce(ctx: &FieldCtx, cap: u64) -> Result<CyclotomicInt> {
    let mut counts = vec![0i64; ctx.p() as usize];
    for x in ctx.enumerate(cap)? {
        let eta = ctx.quadratic_char(x) as i64;
        if eta != 0 {
            counts[ctx.trace(x).value() as usize] += eta;
        }
    }
    Ok(CyclotomicInt::from_exponent_counts(ctx.p(), &counts))
}

/// The quadratic Gauss sum of `F_p`, `sum_(x=1)^(p-1) (x/p) zeta^x`.
pub fn quadratic_gauss_sum(p: u32) -> CyclotomicInt {
    let counts: Vec<i64> = (0..p as u64).map(|x| arith::legendre(x, p as u64) as i64).collect();
    CyclotomicInt::from_exponent_counts(p, &counts)
}

/// `G_h` in closed form: `G_h = (-1)^(h-1) g^h` with `g` the quadratic Gauss
/// sum of `F_p` and `g^2 = (-1)^((p-1)/2) p`. This is `(-1)^(h-1) p^(h/2)`
/// for `p = 1 (mod 4)` and `(-1)^(h-1) i^h p^(h/2)` for `p = 3 (mod 4)`.
pub fn gauss_sum_closed(p: u64, h: u32) -> Result<CyclotomicInt> {
    if p == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if h == 0 {
        return Err(Error::ZeroDegree);
    }
    let p32 = u32::try_from(p).map_err(|_| Error::CharacteristicTooLarge(p))?;
    let p_star = arith::neg_one_pow((p - 1) / 2) * p as i64;
    Ok(if h % 2 == 0 {
        let sign = arith::neg_one_pow(h as u64 - 1);
        CyclotomicInt::from_int(p32, sign * arith::pow_i64(p_star, h / 2))
    } else {
        quadratic_gauss_sum(p32).scale(arith::pow_i64(p_star, (h - 1) / 2))
    })
}

/// Parameters of one special Weil sum over `ctx = F_{p^h}`.
#[derive(Debug, Clone, Copy)]
pub struct WeilSumParams<'c> {
    pub ctx: &'c FieldCtx,
    pub u: u64,
    pub a: FieldElement,
    pub b: FieldElement,
}

impl<'c> WeilSumParams<'c> {
    pub fn new(ctx: &'c FieldCtx, u: u64, a: FieldElement, b: FieldElement) -> Result<Self> {
        if u == 0 {
            return Err(Error::ZeroExponent);
        }
        if a.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        Ok(WeilSumParams { ctx, u, a, b })
    }

    /// `v = gcd(h, u)`.
    pub fn v(&self) -> u64 {
        arith::gcd(self.ctx.n() as u64, self.u)
    }

    /// `s = h/2` for even `h`.
    pub fn half_degree(&self) -> Option<u64> {
        let h = self.ctx.n() as u64;
        (h % 2 == 0).then_some(h / 2)
    }
}

/// `S(a, b)` by adding all `p^h` terms.
pub fn weil_sum_bruteforce(params: &WeilSumParams<'_>, cap: u64) -> Result<CyclotomicInt> {
    let ctx = params.ctx;
    let mut counts = vec![0i64; ctx.p() as usize];
    for x in ctx.enumerate(cap)? {
        let arg = ctx.add(ctx.mul(params.a, ctx.frobenius_norm_like(x, params.u)), ctx.mul(params.b, x));
        counts[ctx.trace(arg).value() as usize] += 1;
    }
    Ok(CyclotomicInt::from_exponent_counts(ctx.p(), &counts))
}

/// Direct summation of `S(a, b)` for every `b` at once.
///
/// The powers `x^(p^u+1)` are computed once, and `Tr(a y)`, `Tr(b x)` are
/// read off precomputed linear functionals instead of multiplying in the
/// field, so one sum costs a table pass. Results equal
/// [`weil_sum_bruteforce`] term by term.
#[derive(Debug, Clone)]
pub struct WeilSumScanner<'c> {
    ctx: &'c FieldCtx,
    u: u64,
    powers: Vec<FieldElement>,
    rows: Option<Vec<Vec<u32>>>,
}

/// Keep all `Tr(b x)` rows in memory up to this many entries.
const ROW_CACHE_ENTRIES: u64 = 1 << 24;

impl<'c> WeilSumScanner<'c> {
    pub fn new(ctx: &'c FieldCtx, u: u64, cap: u64) -> Result<Self> {
        if u == 0 {
            return Err(Error::ZeroExponent);
        }
        let powers = ctx.enumerate(cap)?.map(|x| ctx.frobenius_norm_like(x, u)).collect();
        let q = ctx.order();
        let rows =
            (q.saturating_mul(q) <= ROW_CACHE_ENTRIES).then(|| ctx.elements().map(|b| ctx.trace_row(b)).collect());
        Ok(WeilSumScanner { ctx, u, powers, rows })
    }

    pub fn u(&self) -> u64 {
        self.u
    }

    /// `S(a, b)` for every `b` in enumeration order.
    pub fn sums(&self, a: FieldElement) -> Result<Vec<CyclotomicInt>> {
        if a.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        let ctx = self.ctx;
        let p = ctx.p();
        let fa = ctx.trace_functional(a);
        let ta: Vec<u32> = self.powers.iter().map(|&y| ctx.dot(&fa, y)).collect();
        let mut out = Vec::with_capacity(self.powers.len());
        let mut counts = vec![0i64; p as usize];
        for (bi, b) in ctx.elements().enumerate() {
            let owned;
            let row: &[u32] = match &self.rows {
                Some(rows) => &rows[bi],
                None => {
                    owned = ctx.trace_row(b);
                    &owned
                }
            };
            counts.iter_mut().for_each(|c| *c = 0);
            for (&t, &r) in ta.iter().zip(row) {
                let s = t + r;
                counts[(if s >= p { s - p } else { s }) as usize] += 1;
            }
            out.push(CyclotomicInt::from_exponent_counts(p, &counts));
        }
        Ok(out)
    }
}

/// The linearized map `L(X) = a^(p^u) X^(p^(2u)) + a X` on `F_{p^h}` viewed as
/// an `F_p`-linear endomorphism, reduced once for repeated solving of
/// `L(X) = -b^(p^u)`.
#[derive(Debug, Clone)]
pub struct FrobeniusAffineMap<'c> {
    ctx: &'c FieldCtx,
    u: u64,
    a: FieldElement,
    a_frob: FieldElement,
    system: LinearSystem,
}

impl<'c> FrobeniusAffineMap<'c> {
    pub fn new(ctx: &'c FieldCtx, u: u64, a: FieldElement) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        let a_frob = ctx.frobenius(a, u);
        let mut map = FrobeniusAffineMap { ctx, u, a, a_frob, system: LinearSystem::from_columns(ctx.p(), &[]) };
        let columns: Vec<Vec<u32>> = (0..ctx.n())
            .map(|i| {
                let mut e = vec![0u64; ctx.n()];
                e[i] = 1;
                let basis = ctx.element(&e).expect("basis vector");
                map.apply(basis).coeffs().to_vec()
            })
            .collect();
        map.system = LinearSystem::from_columns(ctx.p(), &columns);
        Ok(map)
    }

    pub fn apply(&self, x: FieldElement) -> FieldElement {
        let ctx = self.ctx;
        ctx.add(ctx.mul(self.a_frob, ctx.frobenius(x, 2 * self.u)), ctx.mul(self.a, x))
    }

    /// Right-hand side `-b^(p^u)`.
    pub fn target(&self, b: FieldElement) -> FieldElement {
        self.ctx.neg(self.ctx.frobenius(b, self.u))
    }

    pub fn kernel_dim(&self) -> usize {
        self.system.kernel_basis().len()
    }

    pub fn is_bijective(&self) -> bool {
        self.system.rank() == self.ctx.n()
    }

    /// `|image| = p^rank`; also the number of `b` for which `L(X) = -b^(p^u)`
    /// is solvable, since `b -> -b^(p^u)` is a bijection.
    pub fn image_size(&self) -> u64 {
        arith::pow(self.ctx.p() as u64, self.system.rank() as u32)
    }

    /// All `p^dim` elements of the kernel, including 0.
    pub fn kernel(&self) -> Vec<FieldElement> {
        let ctx = self.ctx;
        let basis: Vec<FieldElement> = self
            .system
            .kernel_basis()
            .iter()
            .map(|v| ctx.element(&v.iter().map(|&c| c as u64).collect::<Vec<_>>()).expect("kernel vector"))
            .collect();
        let mut out = vec![ctx.zero()];
        for k in basis {
            let mut next = Vec::with_capacity(out.len() * ctx.p() as usize);
            for &x in &out {
                let mut y = x;
                for _ in 0..ctx.p() {
                    next.push(y);
                    y = ctx.add(y, k);
                }
            }
            out = next;
        }
        out
    }

    /// One solution of `L(X) = -b^(p^u)`, if the equation is solvable.
    pub fn particular(&self, b: FieldElement) -> Option<FieldElement> {
        let t = self.target(b);
        let x = self.system.solve(t.coeffs())?;
        Some(self.ctx.element(&x.iter().map(|&c| c as u64).collect::<Vec<_>>()).expect("solution vector"))
    }

    /// The full solution set: empty or a coset of the kernel.
    pub fn solutions(&self, b: FieldElement) -> Vec<FieldElement> {
        match self.particular(b) {
            None => Vec::new(),
            Some(x0) => self.kernel().into_iter().map(|k| self.ctx.add(x0, k)).collect(),
        }
    }
}

pub fn frobenius_affine_solve(ctx: &FieldCtx, u: u64, a: FieldElement, b: FieldElement) -> Result<Vec<FieldElement>> {
    Ok(FrobeniusAffineMap::new(ctx, u, a)?.solutions(b))
}

pub fn frobenius_kernel(ctx: &FieldCtx, u: u64, a: FieldElement) -> Result<Vec<FieldElement>> {
    Ok(FrobeniusAffineMap::new(ctx, u, a)?.kernel())
}

/// `h/v` even and `a^((p^h-1)/(p^v+1)) = (-1)^(h/(2v))`: the condition under
/// which the linearized map has nonzero roots.
pub fn singular_condition(ctx: &FieldCtx, u: u64, a: FieldElement) -> bool {
    let h = ctx.n() as u64;
    let v = arith::gcd(h, u);
    if (h / v) % 2 == 1 {
        return false;
    }
    let e = (ctx.order() - 1) / (arith::pow(ctx.p() as u64, v as u32) + 1);
    let rhs = if (h / (2 * v)) % 2 == 0 { ctx.one() } else { ctx.neg(ctx.one()) };
    ctx.pow(a, e) == rhs
}

/// Whether `a^(p^u) X^(p^(2u)) + a X` permutes `F_{p^h}`, decided from the
/// arithmetic criterion without enumeration.
pub fn is_permutation_f(ctx: &FieldCtx, u: u64, a: FieldElement) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    Ok(!singular_condition(ctx, u, a))
}

/// Number of `b` for which `a^(p^u) X^(p^(2u)) + a X = -b^(p^u)` is solvable,
/// for a singular map (`p^(h-2v)`).
pub fn count_solvable_b(ctx: &FieldCtx, u: u64, a: FieldElement) -> Result<u64> {
    if is_permutation_f(ctx, u, a)? {
        return Err(Error::PermutationMap);
    }
    Ok(FrobeniusAffineMap::new(ctx, u, a)?.image_size())
}

/// Closed-form evaluator for `S(a, b)` with `u` and `a` fixed.
#[derive(Debug, Clone)]
pub struct WeilSumClosedForm<'c> {
    ctx: &'c FieldCtx,
    u: u64,
    a: FieldElement,
    map: FrobeniusAffineMap<'c>,
    permutation: bool,
    /// `G_h eta(a)` when `h/v` is odd.
    gauss_eta: Option<CyclotomicInt>,
    /// `s/v` when `h/v` is even.
    s_over_v: Option<u64>,
    v: u64,
}

impl<'c> WeilSumClosedForm<'c> {
    pub fn new(ctx: &'c FieldCtx, u: u64, a: FieldElement) -> Result<Self> {
        if u == 0 {
            return Err(Error::ZeroExponent);
        }
        let map = FrobeniusAffineMap::new(ctx, u, a)?;
        let h = ctx.n() as u64;
        let v = arith::gcd(h, u);
        let (gauss_eta, s_over_v) = if (h / v) % 2 == 1 {
            let g = gauss_sum_closed(ctx.p() as u64, h as u32)?;
            (Some(g.scale(ctx.quadratic_char(a) as i64)), None)
        } else {
            (None, Some(h / (2 * v)))
        };
        Ok(WeilSumClosedForm { ctx, u, a, map, permutation: is_permutation_f(ctx, u, a)?, gauss_eta, s_over_v, v })
    }

    pub fn is_permutation(&self) -> bool {
        self.permutation
    }

    pub fn map(&self) -> &FrobeniusAffineMap<'c> {
        &self.map
    }

    /// `Tr(-a x0^(p^u+1))`.
    pub fn phase_exponent(&self, x0: FieldElement) -> u64 {
        let ctx = self.ctx;
        let y = ctx.mul(ctx.neg(self.a), ctx.frobenius_norm_like(x0, self.u));
        ctx.trace(y).value() as u64
    }

    pub fn eval(&self, b: FieldElement) -> CyclotomicInt {
        let ctx = self.ctx;
        let p = ctx.p();
        let half = ctx.n() as u32 / 2;
        if b.is_zero() {
            return match (&self.gauss_eta, self.s_over_v) {
                (Some(g), _) => g.clone(),
                (None, Some(sv)) => {
                    let singular = !self.permutation;
                    let value = match (sv % 2 == 0, singular) {
                        (true, false) => arith::pow_i64(p as i64, half),
                        (true, true) => -arith::pow_i64(p as i64, half + self.v as u32),
                        (false, false) => -arith::pow_i64(p as i64, half),
                        (false, true) => arith::pow_i64(p as i64, half + self.v as u32),
                    };
                    CyclotomicInt::from_int(p, value)
                }
                (None, None) => unreachable!(),
            };
        }
        let Some(x0) = self.map.particular(b) else {
            return CyclotomicInt::zero(p);
        };
        let phase = self.phase_exponent(x0);
        if self.permutation {
            match (&self.gauss_eta, self.s_over_v) {
                (Some(g), _) => g.shift(phase),
                (None, None) => unreachable!(),
                (None, Some(sv)) => {
                    let value = arith::neg_one_pow(sv) * arith::pow_i64(p as i64, half);
                    CyclotomicInt::from_int(p, value).shift(phase)
                }
            }
        } else {
            let sv = self.s_over_v.expect("singular maps have h/v even");
            let value = -arith::neg_one_pow(sv) * arith::pow_i64(p as i64, half + self.v as u32);
            CyclotomicInt::from_int(p, value).shift(phase)
        }
    }
}

pub fn weil_sum_closed(params: &WeilSumParams<'_>) -> Result<CyclotomicInt> {
    Ok(WeilSumClosedForm::new(params.ctx, params.u, params.a)?.eval(params.b))
}

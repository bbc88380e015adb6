//! The authentication code `E_k(s) = (s + k^(p^r), Tr(s k))` over `F_{p^n}`.
//!
//! Sources and keys are elements of `F_{p^n}`, messages are pairs in
//! `F_{p^n} x F_p`. A message `(m1, m2)` is accepted by the keys `k` with
//! `Tr(m1 k - k^(p^r+1)) = m2`, so deception probabilities reduce to the key
//! counts
//!
//! ```text
//! N(a, b)       = #{x : Tr(a x - x^(p^r+1)) = b}
//! N(a, b, c, d) = #{x : Tr(a x - x^(p^r+1)) = b and Tr(c x) = d}
//! ```
//!
//! Impersonation succeeds with probability `P_I = max N(a, b) / p^n` and
//! substitution with `P_S = max N(a, b, c, d) / N(a, b)` over `c != 0`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Range;

use crate::arith;
use crate::charsum::{gauss_sum_closed, FrobeniusAffineMap};
use crate::field::{FieldCtx, FieldElement, PrimeFieldElement};
use crate::{caps, Error, Rational, Result};

/// The parity pattern of `(n, n/v, n/(2v))` that selects the key-count formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CodeCase {
    /// `n` odd.
    OddDegree,
    /// `n` even, `n/v` odd.
    OddRatio,
    /// `n/v` even, `n/(2v)` odd.
    EvenRatioOddHalf,
    /// `n/v` even, `n/(2v)` even.
    EvenRatioEvenHalf,
}

impl CodeCase {
    /// 1 through 4 in declaration order.
    pub fn id(self) -> u8 {
        match self {
            CodeCase::OddDegree => 1,
            CodeCase::OddRatio => 2,
            CodeCase::EvenRatioOddHalf => 3,
            CodeCase::EvenRatioEvenHalf => 4,
        }
    }
}

impl fmt::Display for CodeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CodeCase::OddDegree => "n odd",
            CodeCase::OddRatio => "n even, n/v odd",
            CodeCase::EvenRatioOddHalf => "n/v even, n/2v odd",
            CodeCase::EvenRatioEvenHalf => "n/v even, n/2v even",
        };
        f.write_str(name)
    }
}

/// A code instance: the field `F_{p^n}` and the Frobenius exponent `r`.
#[derive(Debug, Clone)]
pub struct CodeParams {
    ctx: FieldCtx,
    r: u64,
}

impl CodeParams {
    pub fn new(ctx: FieldCtx, r: u64) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroExponent);
        }
        Ok(CodeParams { ctx, r })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn p(&self) -> u32 {
        self.ctx.p()
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    /// `v = gcd(n, r)`.
    pub fn v(&self) -> u64 {
        arith::gcd(self.n() as u64, self.r)
    }

    /// `t = n/2` for even `n`.
    pub fn half_degree(&self) -> Option<u64> {
        (self.n() % 2 == 0).then_some(self.n() as u64 / 2)
    }

    pub fn case(&self) -> CodeCase {
        let n = self.n() as u64;
        let v = self.v();
        if n % 2 == 1 {
            CodeCase::OddDegree
        } else if (n / v) % 2 == 1 {
            CodeCase::OddRatio
        } else if (n / (2 * v)) % 2 == 1 {
            CodeCase::EvenRatioOddHalf
        } else {
            CodeCase::EvenRatioEvenHalf
        }
    }

    /// `|S| = |K| = p^n`.
    pub fn source_count(&self) -> u64 {
        self.ctx.order()
    }

    /// `|M| = p^(n+1)`.
    pub fn message_count(&self) -> u64 {
        self.ctx.order() * self.p() as u64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Message {
    pub m1: FieldElement,
    pub m2: PrimeFieldElement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Accept(FieldElement),
    Reject,
}

pub fn encode(params: &CodeParams, k: FieldElement, s: FieldElement) -> Message {
    let ctx = params.ctx();
    Message { m1: ctx.add(s, ctx.frobenius(k, params.r())), m2: ctx.trace(ctx.mul(s, k)) }
}

pub fn verify(params: &CodeParams, k: FieldElement, m: Message) -> Verdict {
    let ctx = params.ctx();
    let s = ctx.sub(m.m1, ctx.frobenius(k, params.r()));
    if ctx.trace(ctx.mul(s, k)) == m.m2 {
        Verdict::Accept(s)
    } else {
        Verdict::Reject
    }
}

/// A substitution target in reduced form: the opponent saw a message whose
/// acceptance condition is `Tr(a x - x^(p^r+1)) = b` and needs
/// `Tr(alpha x) = beta` to hold as well.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubstitutionQuery {
    pub alpha: FieldElement,
    pub beta: PrimeFieldElement,
    pub a: FieldElement,
    pub b: PrimeFieldElement,
}

impl SubstitutionQuery {
    pub fn new(alpha: FieldElement, beta: PrimeFieldElement, a: FieldElement, b: PrimeFieldElement) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        Ok(SubstitutionQuery { alpha, beta, a, b })
    }
}

/// `Tr(a x - x^(p^r+1))`.
fn acceptance_value(params: &CodeParams, a: FieldElement, x: FieldElement) -> PrimeFieldElement {
    let ctx = params.ctx();
    ctx.trace(ctx.sub(ctx.mul(a, x), ctx.frobenius_norm_like(x, params.r())))
}

/// `N(a, b)` by enumerating all keys.
pub fn count_keys_bruteforce(params: &CodeParams, a: FieldElement, b: PrimeFieldElement, cap: u64) -> Result<u64> {
    let ctx = params.ctx();
    Ok(ctx.enumerate(cap)?.filter(|&x| acceptance_value(params, a, x) == b).count() as u64)
}

/// `N(a, b, alpha, beta)` by enumerating all keys.
pub fn count_keys_joint_bruteforce(params: &CodeParams, q: &SubstitutionQuery, cap: u64) -> Result<u64> {
    if q.alpha.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    let ctx = params.ctx();
    Ok(ctx
        .enumerate(cap)?
        .filter(|&x| acceptance_value(params, q.a, x) == q.b && ctx.trace(ctx.mul(q.alpha, x)) == q.beta)
        .count() as u64)
}

/// Closed-form key counts. Holds the reduced linear system for
/// `X^(p^(2r)) + X = -a^(p^r)` and the integer Gauss sum combinations.
#[derive(Debug, Clone)]
pub struct KeyCountClosedForm<'c> {
    params: &'c CodeParams,
    map: FrobeniusAffineMap<'c>,
    /// `G_n G_1` for odd `n`, `G_n` for even `n`: an integer either way.
    gauss: i64,
}

impl<'c> KeyCountClosedForm<'c> {
    pub fn new(params: &'c CodeParams) -> Result<Self> {
        let ctx = params.ctx();
        let p = ctx.p() as u64;
        let n = ctx.n() as u32;
        let g_n = gauss_sum_closed(p, n)?;
        let gauss = if n % 2 == 1 { (&g_n * &gauss_sum_closed(p, 1)?).as_integer() } else { g_n.as_integer() }
            .expect("integral Gauss sum combination");
        let map = FrobeniusAffineMap::new(ctx, params.r(), ctx.one())?;
        Ok(KeyCountClosedForm { params, map, gauss })
    }

    /// `G_n G_1` (odd `n`) or `G_n` (even `n`).
    pub fn gauss_integer(&self) -> i64 {
        self.gauss
    }

    /// `Tr(g^(p^r+1))` for a solution `g` of `X^(p^(2r)) + X = -a^(p^r)`, or
    /// `None` when there is no solution.
    pub fn lambda(&self, a: FieldElement) -> Option<PrimeFieldElement> {
        let ctx = self.params.ctx();
        let g = self.map.particular(a)?;
        Some(ctx.trace(ctx.frobenius_norm_like(g, self.params.r())))
    }

    pub fn count(&self, a: FieldElement, b: PrimeFieldElement) -> u64 {
        self.count_shifted(self.shift(a), b)
    }

    /// `N(a, b)` for every `b`.
    pub fn counts(&self, a: FieldElement) -> Vec<u64> {
        let shift = self.shift(a);
        let ctx = self.params.ctx();
        (0..ctx.p()).map(|b| self.count_shifted(shift, ctx.fp(b as i64))).collect()
    }

    /// The value of `b` singled out by the formulas: 0 for `a = 0`, lambda
    /// otherwise.
    fn shift(&self, a: FieldElement) -> Option<PrimeFieldElement> {
        if a.is_zero() {
            Some(PrimeFieldElement::ZERO)
        } else {
            self.lambda(a)
        }
    }

    fn count_shifted(&self, shift: Option<PrimeFieldElement>, b: PrimeFieldElement) -> u64 {
        let params = self.params;
        let ctx = params.ctx();
        let p = ctx.p() as i64;
        let n = ctx.n() as u32;
        let base = arith::pow_i64(p, n - 1);
        let count = match params.case() {
            CodeCase::OddDegree => {
                let d = ctx.fp_sub(b, shift.expect("bijective map"));
                let eta = arith::legendre(d.value() as u64, p as u64) as i64;
                base + self.gauss / p * eta
            }
            CodeCase::OddRatio => {
                if b == shift.expect("bijective map") {
                    base + (p - 1) * self.gauss / p
                } else {
                    base - self.gauss / p
                }
            }
            CodeCase::EvenRatioOddHalf | CodeCase::EvenRatioEvenHalf => {
                let t = n / 2;
                let e = if params.case() == CodeCase::EvenRatioOddHalf { t - 1 } else { t + params.v() as u32 - 1 };
                match shift {
                    None => base,
                    Some(l) if l == b => base - (p - 1) * arith::pow_i64(p, e),
                    Some(_) => base + arith::pow_i64(p, e),
                }
            }
        };
        u64::try_from(count).expect("key counts are nonnegative")
    }
}

/// `Tr(g^(p^r+1))` for a solution `g` of `X^(p^(2r)) + X = -a^(p^r)`, or
/// `None` when that equation has no solution.
pub fn lambda_of(params: &CodeParams, a: FieldElement) -> Result<Option<PrimeFieldElement>> {
    if a.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    Ok(KeyCountClosedForm::new(params)?.lambda(a))
}

pub fn count_keys_closed(params: &CodeParams, a: FieldElement, b: PrimeFieldElement) -> Result<u64> {
    Ok(KeyCountClosedForm::new(params)?.count(a, b))
}

/// Largest `N(a, b)` with the smallest `(a index, b)` attaining it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PiMax {
    pub count: u64,
    pub a_index: u64,
    pub b: u32,
}

impl PiMax {
    fn better_than(&self, other: &PiMax) -> bool {
        match self.count.cmp(&other.count) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => (self.a_index, self.b) < (other.a_index, other.b),
        }
    }

    /// Combine two partial maxima; the result does not depend on order.
    pub fn merge(a: Option<PiMax>, b: Option<PiMax>) -> Option<PiMax> {
        match (a, b) {
            (Some(x), Some(y)) => Some(if y.better_than(&x) { y } else { x }),
            (x, None) => x,
            (None, y) => y,
        }
    }
}

/// Largest `N(a, b, alpha, beta) / N(a, b)` with its smallest argument
/// `(a, alpha, b, beta)` in index order, plus the number of `(a, b)` skipped
/// because no key accepts them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PsMax {
    pub joint: u64,
    pub count: u64,
    pub a_index: u64,
    pub b: u32,
    pub alpha_index: u64,
    pub beta: u32,
}

impl PsMax {
    fn key(&self) -> (u64, u64, u32, u32) {
        (self.a_index, self.alpha_index, self.b, self.beta)
    }

    fn better_than(&self, other: &PsMax) -> bool {
        let lhs = self.joint as u128 * other.count as u128;
        let rhs = other.joint as u128 * self.count as u128;
        match lhs.cmp(&rhs) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => self.key() < other.key(),
        }
    }

    pub fn ratio(&self) -> Rational {
        Rational::new(self.joint, self.count)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PsPartial {
    pub best: Option<PsMax>,
    pub skipped: u64,
}

impl PsPartial {
    pub fn merge(self, other: PsPartial) -> PsPartial {
        let best = match (self.best, other.best) {
            (Some(x), Some(y)) => Some(if y.better_than(&x) { y } else { x }),
            (x, None) => x,
            (None, y) => y,
        };
        PsPartial { best, skipped: self.skipped + other.skipped }
    }
}

/// Exhaustive key-count scans over ranges of `a`, in enumeration index order.
///
/// Precomputes `Tr(x^(p^r+1))` once so each `N(a, .)` histogram is a single
/// pass over a trace row. Ranges can be scanned independently and merged.
#[derive(Debug, Clone)]
pub struct KeyScanner<'c> {
    params: &'c CodeParams,
    norm_traces: Vec<u32>,
}

impl<'c> KeyScanner<'c> {
    pub fn new(params: &'c CodeParams, cap: u64) -> Result<Self> {
        let ctx = params.ctx();
        let norm_traces =
            ctx.enumerate(cap)?.map(|x| ctx.trace(ctx.frobenius_norm_like(x, params.r())).value()).collect();
        Ok(KeyScanner { params, norm_traces })
    }

    pub fn params(&self) -> &'c CodeParams {
        self.params
    }

    /// `Tr(a x - x^(p^r+1))` for every `x`.
    fn acceptance_row(&self, a: FieldElement) -> Vec<u32> {
        let p = self.params.p();
        let mut row = self.params.ctx().trace_row(a);
        for (t, &w) in row.iter_mut().zip(&self.norm_traces) {
            *t = if *t >= w { *t - w } else { *t + p - w };
        }
        row
    }

    /// `N(a, b)` for every `b`.
    pub fn counts(&self, a: FieldElement) -> Vec<u64> {
        let mut counts = vec![0u64; self.params.p() as usize];
        for v in self.acceptance_row(a) {
            counts[v as usize] += 1;
        }
        counts
    }

    /// `N(a, b)` for `a` in `range`, flattened as `[a][b]`.
    pub fn count_table(&self, range: Range<u64>) -> Vec<u64> {
        let ctx = self.params.ctx();
        range.flat_map(|ai| self.counts(ctx.element_at(ai))).collect()
    }

    pub fn pi_partial(&self, range: Range<u64>) -> Option<PiMax> {
        let ctx = self.params.ctx();
        let mut best = None;
        for ai in range {
            for (b, &count) in self.counts(ctx.element_at(ai)).iter().enumerate() {
                best = PiMax::merge(best, Some(PiMax { count, a_index: ai, b: b as u32 }));
            }
        }
        best
    }

    /// Substitution scan over `a` in `range` against every `alpha != 0`.
    pub fn ps_partial(&self, range: Range<u64>) -> PsPartial {
        let ctx = self.params.ctx();
        let p = self.params.p() as usize;
        let alpha_rows: Vec<Vec<u32>> = ctx.elements().skip(1).map(|c| ctx.trace_row(c)).collect();
        let mut out = PsPartial::default();
        let mut joint = vec![0u64; p * p];
        for ai in range {
            let row = self.acceptance_row(ctx.element_at(ai));
            let mut counts = vec![0u64; p];
            row.iter().for_each(|&v| counts[v as usize] += 1);
            out.skipped += counts.iter().filter(|&&c| c == 0).count() as u64;
            for (ci, alpha_row) in alpha_rows.iter().enumerate() {
                joint.iter_mut().for_each(|j| *j = 0);
                for (&v, &t) in row.iter().zip(alpha_row) {
                    joint[v as usize * p + t as usize] += 1;
                }
                for (b, &count) in counts.iter().enumerate() {
                    if count == 0 {
                        continue;
                    }
                    for beta in 0..p {
                        let cand = PsMax {
                            joint: joint[b * p + beta],
                            count,
                            a_index: ai,
                            b: b as u32,
                            alpha_index: ci as u64 + 1,
                            beta: beta as u32,
                        };
                        if out.best.map_or(true, |cur| cand.better_than(&cur)) {
                            out.best = Some(cand);
                        }
                    }
                }
            }
        }
        out
    }
}

/// `P_I` with the maximizing `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PiScan {
    pub value: Rational,
    pub argmax: PiMax,
}

pub fn pi_scan(params: &CodeParams, cap: u64) -> Result<PiScan> {
    caps::check(params.source_count(), cap)?;
    let scanner = KeyScanner::new(params, cap)?;
    let argmax = scanner.pi_partial(0..params.source_count()).expect("nonempty field");
    Ok(PiScan { value: Rational::new(argmax.count, params.source_count()), argmax })
}

/// `P_I = max_(a, b) N(a, b) / p^n` by exhaustive scan.
pub fn pi_exact(params: &CodeParams, cap: u64) -> Result<Rational> {
    Ok(pi_scan(params, cap)?.value)
}

/// `P_I` from the closed-form key counts: the largest value any of the
/// applicable count formulas takes, over `p^n`.
pub fn pi_closed(params: &CodeParams) -> Result<Rational> {
    let p = params.p() as u64;
    let n = params.n() as u32;
    let q = params.source_count();
    let inv_p = Rational::new(1, p);
    Ok(match params.case() {
        CodeCase::OddDegree => inv_p + Rational::new(1, arith::pow(p, n.div_ceil(2))),
        CodeCase::OddRatio => {
            // N(0, 0) = p^(n-1) + (p-1) G_n / p and N(0, b) = p^(n-1) - G_n / p
            // for b != 0; which is larger depends on the sign of G_n.
            let gauss = KeyCountClosedForm::new(params)?.gauss_integer();
            let excess = if gauss < 0 { gauss.unsigned_abs() / p } else { (p - 1) * gauss as u64 / p };
            Rational::new(q / p + excess, q)
        }
        CodeCase::EvenRatioOddHalf => inv_p + Rational::new(1, arith::pow(p, n / 2 + 1)),
        CodeCase::EvenRatioEvenHalf => inv_p + Rational::new(1, arith::pow(p, n / 2 - params.v() as u32 + 1)),
    })
}

/// The textbook four-case `P_I` formula, `1/p + 1/p^(t+1)` in both middle
/// cases. Differs from [`pi_closed`] in the `n even, n/v odd` case whenever
/// `G_n > 0`, i.e. `p = 3 (mod 4)` and `n/2` odd.
pub fn pi_four_case_formula(params: &CodeParams) -> Rational {
    let p = params.p() as u64;
    let n = params.n() as u32;
    let inv_p = Rational::new(1, p);
    match params.case() {
        CodeCase::OddDegree => inv_p + Rational::new(1, arith::pow(p, n.div_ceil(2))),
        CodeCase::OddRatio | CodeCase::EvenRatioOddHalf => inv_p + Rational::new(1, arith::pow(p, n / 2 + 1)),
        CodeCase::EvenRatioEvenHalf => inv_p + Rational::new(1, arith::pow(p, n / 2 - params.v() as u32 + 1)),
    }
}

/// `P_S` with its maximizer and the number of skipped `(a, b)` with
/// `N(a, b) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PsScan {
    pub value: Rational,
    pub argmax: PsMax,
    pub skipped: u64,
}

pub fn ps_scan(params: &CodeParams, cap: u64) -> Result<PsScan> {
    caps::check(params.source_count(), cap)?;
    let scanner = KeyScanner::new(params, cap)?;
    let partial = scanner.ps_partial(0..params.source_count());
    let argmax = partial.best.ok_or(Error::EmptyRange)?;
    Ok(PsScan { value: argmax.ratio(), argmax, skipped: partial.skipped })
}

/// `P_S = max N(a, b, alpha, beta) / N(a, b)` over `alpha != 0` by exhaustive scan.
pub fn ps_exact(params: &CodeParams, cap: u64) -> Result<Rational> {
    Ok(ps_scan(params, cap)?.value)
}

/// Upper bound on `P_S` together with the case that produced it; `value` is
/// `None` when no bound applies (the `n/v`, `n/(2v)` even case below
/// `n = 8`, or `n = 1` where the denominator vanishes).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsBound {
    pub case: CodeCase,
    pub value: Option<f64>,
}

pub fn ps_bound(params: &CodeParams) -> PsBound {
    let case = params.case();
    let p = params.p() as f64;
    let n = params.n() as f64;
    let v = params.v() as f64;
    let pw = |e: f64| libm::pow(p, e);
    let (exp_num, den) = match case {
        CodeCase::OddDegree => ((n - 4.0) / 2.0, pw(n - 1.0) - pw((n - 1.0) / 2.0)),
        CodeCase::OddRatio | CodeCase::EvenRatioOddHalf => {
            ((n - 4.0) / 2.0, pw(n - 1.0) - (p - 1.0) * pw((n - 2.0) / 2.0))
        }
        CodeCase::EvenRatioEvenHalf => {
            if params.n() < 8 {
                return PsBound { case, value: None };
            }
            (n / 2.0 + v - 2.0, pw(n - 1.0) - (p - 1.0) * pw(n / 2.0 + v - 1.0))
        }
    };
    if den <= 0.0 {
        return PsBound { case, value: None };
    }
    let num = pw(n - 2.0) + (p - 1.0) * pw(exp_num) + (p - 1.0) * (p - 1.0) * pw(exp_num);
    PsBound { case, value: Some(num / den) }
}

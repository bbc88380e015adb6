//! Lower bounds on deception probabilities and the entropies behind them.
//!
//! For a code with sources `S`, messages `M` and keys `E`:
//!
//! - combinatorial: `P_I >= |S|/|M|`, `P_S >= (|S|-1)/(|M|-1)`;
//! - information-theoretic: `P_I >= 2^(H(E|M) - H(E))`,
//!   `P_S >= 2^(H(E|M^2) - H(E|M))`.
//!
//! Entropies are in bits. Under uniform sources and keys the keys consistent
//! with an observation are equally likely, so `H(E|M) = sum_m P(m) log2 N(m)`
//! with `N(m)` the number of keys accepting `m`.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::authcode::{self, encode, CodeCase, CodeParams, KeyScanner};
use crate::field::make_field;
use crate::{caps, Caps, Error, Rational, Result};

/// `|S|/|M|` and `(|S|-1)/(|M|-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CombinatorialBound {
    pub impersonation: Rational,
    pub substitution: Rational,
}

pub fn combinatorial_bound(sources: u64, messages: u64) -> Result<CombinatorialBound> {
    if sources < 2 || messages < sources {
        return Err(Error::DegenerateSizes { sources, messages });
    }
    Ok(CombinatorialBound {
        impersonation: Rational::new(sources, messages),
        substitution: Rational::new(sources - 1, messages - 1),
    })
}

/// Message counts `N(m1, m2)` under uniform `(s, k)`, indexed by
/// `index(m1) * p + m2`. Every `(s, k)` yields one message, so the counts
/// add up to `p^(2n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MessageDistribution {
    p: u32,
    counts: Vec<u64>,
    total: u64,
}

impl MessageDistribution {
    /// From a `[m1][m2]` count table.
    pub fn from_table(params: &CodeParams, counts: Vec<u64>) -> Result<Self> {
        let q = params.source_count();
        if counts.len() as u64 != params.message_count() {
            return Err(Error::CoefficientCount { expected: params.message_count() as usize, got: counts.len() });
        }
        Ok(MessageDistribution { p: params.p(), counts, total: q * q })
    }

    /// One key-count scan per `m1`: `N(m1, m2)` keys accept `(m1, m2)`.
    pub fn from_key_counts(params: &CodeParams, cap: u64) -> Result<Self> {
        caps::check(params.source_count(), cap)?;
        let scanner = KeyScanner::new(params, cap)?;
        Self::from_table(params, scanner.count_table(0..params.source_count()))
    }

    /// Encodes every `(s, k)` and tallies the messages.
    pub fn from_encodings(params: &CodeParams, cap: u64) -> Result<Self> {
        caps::check(params.source_count(), cap)?;
        Self::from_table(params, encoding_counts(params, 0..params.source_count()))
    }

    pub fn count(&self, m1_index: u64, m2: u32) -> u64 {
        self.counts[(m1_index * self.p as u64 + m2 as u64) as usize]
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `p^(2n)`.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// `(N, number of messages with that count)`, ascending in `N`.
    pub fn histogram(&self) -> Vec<(u64, u64)> {
        let mut sorted = self.counts.clone();
        sorted.sort_unstable();
        run_lengths(&sorted)
    }
}

/// Message tallies from encoding every source under the keys with index in
/// `keys`; tallies over disjoint key ranges add up.
pub fn encoding_counts(params: &CodeParams, keys: core::ops::Range<u64>) -> Vec<u64> {
    let ctx = params.ctx();
    let p = params.p() as u64;
    let mut counts = alloc::vec![0u64; params.message_count() as usize];
    for ki in keys {
        let k = ctx.element_at(ki);
        for s in ctx.elements() {
            let m = encode(params, k, s);
            counts[(ctx.index_of(m.m1) * p + m.m2.value() as u64) as usize] += 1;
        }
    }
    counts
}

fn run_lengths<T: Copy + PartialEq>(sorted: &[T]) -> Vec<(T, u64)> {
    let mut out: Vec<(T, u64)> = Vec::new();
    for &x in sorted {
        match out.last_mut() {
            Some((y, c)) if *y == x => *c += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// `sum (N / total) log2 N` over a histogram of counts.
fn weighted_log(histogram: &[(u64, u64)], total: u64) -> f64 {
    histogram
        .iter()
        .filter(|(n, _)| *n > 0)
        .map(|&(n, mult)| mult as f64 * n as f64 / total as f64 * libm::log2(n as f64))
        .sum()
}

/// `H(E) = n log2 p`.
pub fn h_e(params: &CodeParams) -> f64 {
    params.n() as f64 * libm::log2(params.p() as f64)
}

/// `H(E|M)` from the message distribution.
pub fn h_e_given_m(dist: &MessageDistribution) -> f64 {
    weighted_log(&dist.histogram(), dist.total())
}

/// Identifiers of the ordered message pairs `(E_k(s1), E_k(s2))`, `s1 != s2`,
/// for keys with index in `keys`. Unsorted; concatenations over disjoint key
/// ranges describe the union.
pub fn message_pair_ids(params: &CodeParams, keys: core::ops::Range<u64>) -> Vec<u64> {
    let ctx = params.ctx();
    let p = params.p() as u64;
    let m = params.message_count();
    let mut out = Vec::new();
    for ki in keys {
        let k = ctx.element_at(ki);
        let ids: Vec<u64> = ctx
            .elements()
            .map(|s| {
                let msg = encode(params, k, s);
                ctx.index_of(msg.m1) * p + msg.m2.value() as u64
            })
            .collect();
        for (i, &x) in ids.iter().enumerate() {
            for (j, &y) in ids.iter().enumerate() {
                if i != j {
                    out.push(x * m + y);
                }
            }
        }
    }
    out
}

/// `H(E|M^2)` from all message pair identifiers: the number of keys
/// consistent with a pair is its multiplicity.
pub fn h_e_given_mm_from_pairs(params: &CodeParams, mut ids: Vec<u64>) -> f64 {
    ids.sort_unstable();
    let pair_counts: Vec<u64> = run_lengths(&ids).into_iter().map(|(_, c)| c).collect();
    let mut sorted = pair_counts;
    sorted.sort_unstable();
    let q = params.source_count();
    weighted_log(&run_lengths(&sorted), q * q * (q - 1))
}

/// `H(E|M^2)` over ordered pairs of messages with distinct sources.
pub fn h_e_given_mm(params: &CodeParams, cap: u64) -> Result<f64> {
    caps::check(params.source_count(), cap)?;
    let q = params.source_count();
    Ok(h_e_given_mm_from_pairs(params, message_pair_ids(params, 0..q)))
}

/// Information-theoretic quantities for one code.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyReport {
    pub h_e: f64,
    pub h_e_given_m: f64,
    pub h_e_given_mm: Option<f64>,
    /// `2^(H(E|M) - H(E))`.
    pub q_i: f64,
    /// `2^(H(E|M^2) - H(E|M))`.
    pub q_s: Option<f64>,
    pub pi_value: Rational,
    pub ps_value: Option<Rational>,
    pub ratio_q_pi: f64,
    pub ratio_r_pi: f64,
    pub ratio_p_ps: Option<f64>,
}

impl EntropyReport {
    pub fn new(
        params: &CodeParams,
        dist: &MessageDistribution,
        h_e_given_mm: Option<f64>,
        pi_value: Rational,
        ps_value: Option<Rational>,
    ) -> Result<Self> {
        let he = h_e(params);
        let hm = h_e_given_m(dist);
        let q_i = libm::exp2(hm - he);
        let q_s = h_e_given_mm.map(|hmm| libm::exp2(hmm - hm));
        let comb = combinatorial_bound(params.source_count(), params.message_count())?;
        Ok(EntropyReport {
            h_e: he,
            h_e_given_m: hm,
            h_e_given_mm,
            q_i,
            q_s,
            pi_value,
            ps_value,
            ratio_q_pi: q_i / to_f64(pi_value),
            ratio_r_pi: to_f64(comb.impersonation / pi_value),
            ratio_p_ps: ps_value.map(|ps| to_f64(comb.substitution / ps)),
        })
    }
}

pub fn to_f64(x: Rational) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// One line of the optimality table. Optional fields are absent when the
/// instance exceeds the corresponding cap or no bound applies.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub p: u32,
    pub n: usize,
    pub r: u64,
    pub v: u64,
    pub case: CodeCase,
    pub pi_exact: Option<Rational>,
    pub pi_closed: Rational,
    pub ps_exact: Option<Rational>,
    pub ps_bound: Option<f64>,
    pub comb: CombinatorialBound,
    pub h_e: f64,
    pub h_e_given_m: Option<f64>,
    pub q_i: Option<f64>,
    /// `R / P_I` with the closed-form `P_I`.
    pub ratio_r_pi: Rational,
    /// `q_i / P_I` with the exact `P_I`.
    pub ratio_q_pi: Option<f64>,
}

impl ReportRow {
    /// Assemble a row from separately computed pieces.
    pub fn assemble(
        params: &CodeParams,
        pi_exact: Option<Rational>,
        ps_exact: Option<Rational>,
        dist: Option<&MessageDistribution>,
    ) -> Result<Self> {
        let pi_closed = authcode::pi_closed(params)?;
        let comb = combinatorial_bound(params.source_count(), params.message_count())?;
        let he = h_e(params);
        let h_e_given_m = dist.map(h_e_given_m);
        let q_i = h_e_given_m.map(|hm| libm::exp2(hm - he));
        let ratio_q_pi = match (q_i, pi_exact) {
            (Some(q), Some(pi)) => Some(q / to_f64(pi)),
            _ => None,
        };
        Ok(ReportRow {
            p: params.p(),
            n: params.n(),
            r: params.r(),
            v: params.v(),
            case: params.case(),
            pi_exact,
            pi_closed,
            ps_exact,
            ps_bound: authcode::ps_bound(params).value,
            comb,
            h_e: he,
            h_e_given_m,
            q_i,
            ratio_r_pi: comb.impersonation / pi_closed,
            ratio_q_pi,
        })
    }
}

/// One row per `n` in `degrees` for fixed `p` and `r`, computing each exact
/// quantity only where the caps allow: `P_I` and `H(E|M)` up to
/// `caps.scan_cap` and `P_S` up to `caps.ps_cap`.
pub fn optimality_report(p: u64, r: u64, degrees: RangeInclusive<usize>, caps: &Caps) -> Result<Vec<ReportRow>> {
    if degrees.is_empty() {
        return Err(Error::EmptyRange);
    }
    degrees
        .map(|n| {
            let params = CodeParams::new(make_field(p, n, None)?, r)?;
            let q = params.source_count();
            let pi = (q <= caps.scan_cap).then(|| authcode::pi_exact(&params, caps.scan_cap)).transpose()?;
            let ps = (q <= caps.ps_cap).then(|| authcode::ps_exact(&params, caps.ps_cap)).transpose()?;
            let dist = (q <= caps.scan_cap)
                .then(|| MessageDistribution::from_key_counts(&params, caps.scan_cap))
                .transpose()?;
            ReportRow::assemble(&params, pi, ps, dist.as_ref())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: u64 = 1 << 20;

    fn code(p: u64, n: usize, r: u64) -> CodeParams {
        CodeParams::new(make_field(p, n, None).unwrap(), r).unwrap()
    }

    #[test]
    fn combinatorial_values() {
        let b = combinatorial_bound(27, 81).unwrap();
        assert_eq!(b.impersonation, Rational::new(1, 3));
        assert_eq!(b.substitution, Rational::new(13, 40));
        assert_eq!(combinatorial_bound(3, 9).unwrap().substitution, Rational::new(1, 4));
        assert_eq!(combinatorial_bound(5, 5).unwrap().impersonation, Rational::new(1, 1));
        assert!(matches!(combinatorial_bound(9, 3), Err(Error::DegenerateSizes { .. })));
        assert!(matches!(combinatorial_bound(1, 3), Err(Error::DegenerateSizes { .. })));
    }

    #[test]
    fn distribution_two_ways() {
        for (p, n, r) in [(3, 2, 1), (3, 3, 1), (3, 3, 2), (5, 2, 1), (3, 4, 1)] {
            let c = code(p, n, r);
            let a = MessageDistribution::from_key_counts(&c, CAP).unwrap();
            let b = MessageDistribution::from_encodings(&c, CAP).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.counts().iter().sum::<u64>(), a.total());
        }
        let c = code(3, 3, 1);
        assert_eq!(MessageDistribution::from_key_counts(&c, CAP).unwrap().count(0, 0), 9);
    }

    #[test]
    fn entropy_values() {
        let c = code(3, 3, 1);
        assert!((h_e(&c) - 4.754887502163468).abs() < 1e-12);
        assert!((h_e(&code(3, 1, 1)) - libm::log2(3.0)).abs() < 1e-15);
        let dist = MessageDistribution::from_key_counts(&c, CAP).unwrap();
        let hm = h_e_given_m(&dist);
        assert!(hm > 0.0 && hm < h_e(&c));
        let hmm = h_e_given_mm(&c, CAP).unwrap();
        assert!(hmm <= hm + 1e-12);
    }

    #[test]
    fn uniform_posterior_gives_log_of_count() {
        let c = code(3, 1, 1);
        // an artificial distribution where every message has 0 or 3 keys
        let mut counts = alloc::vec![0u64; 9];
        counts[0] = 3;
        counts[4] = 3;
        counts[8] = 3;
        let d = MessageDistribution::from_table(&c, counts).unwrap();
        assert!((h_e_given_m(&d) - libm::log2(3.0)).abs() < 1e-15);
    }

    #[test]
    fn report_rows() {
        let caps = Caps::default();
        let rows = optimality_report(3, 1, 3..=7, &caps).unwrap();
        let ratios: Vec<_> = rows.iter().filter(|r| r.n % 2 == 1).map(|r| r.ratio_r_pi).collect();
        assert_eq!(ratios, [Rational::new(3, 4), Rational::new(9, 10), Rational::new(27, 28)]);
        assert!(rows.iter().all(|r| r.ratio_r_pi < Rational::new(1, 1)));
        assert!(rows[0].ps_exact.is_some());
        assert!(rows[4].ps_exact.is_none());
        assert!(rows.iter().all(|r| r.ratio_q_pi.unwrap() <= 1.0 + 1e-9));
        assert_eq!(optimality_report(3, 1, RangeInclusive::new(5, 4), &caps).unwrap_err(), Error::EmptyRange);
    }
}

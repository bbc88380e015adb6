//! Parallel drivers over the core range kernels. Every scan splits its index
//! space into the same fixed chunks regardless of the worker count and merges
//! the partial results in chunk order, so results do not depend on `jobs`.

use std::ops::{Range, RangeInclusive};

use rayon::prelude::*;
use weilauth_core::authcode::{CodeParams, KeyScanner, PiMax, PiScan, PsPartial, PsScan};
use weilauth_core::bounds::{self, MessageDistribution, ReportRow};
use weilauth_core::charsum::WeilSumScanner;
use weilauth_core::cyclotomic::CyclotomicInt;
use weilauth_core::field::{make_field, FieldCtx};
use weilauth_core::{Caps, Error, Rational};

use crate::error::Result;

const CHUNKS: u64 = 64;

/// A bounded rayon pool.
#[derive(Debug)]
pub struct Pool {
    pool: rayon::ThreadPool,
}

impl Pool {
    /// `jobs = None` uses one worker per available core.
    pub fn new(jobs: Option<usize>) -> Result<Self> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(j) = jobs {
            builder = builder.num_threads(j.max(1));
        }
        Ok(Pool { pool: builder.build()? })
    }

    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        self.pool.install(f)
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }
}

pub fn chunks(total: u64) -> Vec<Range<u64>> {
    let size = total.div_ceil(CHUNKS).max(1);
    (0..total).step_by(size as usize).map(|s| s..(s + size).min(total)).collect()
}

fn check(size: u64, cap: u64) -> Result<()> {
    if size > cap {
        return Err(Error::CapExceeded { size, cap }.into());
    }
    Ok(())
}

pub fn pi_scan(pool: &Pool, params: &CodeParams, cap: u64) -> Result<PiScan> {
    let q = params.source_count();
    check(q, cap)?;
    let scanner = KeyScanner::new(params, cap)?;
    let parts: Vec<Option<PiMax>> = pool.install(|| chunks(q).into_par_iter().map(|r| scanner.pi_partial(r)).collect());
    let argmax = parts.into_iter().fold(None, PiMax::merge).expect("nonempty field");
    Ok(PiScan { value: Rational::new(argmax.count, q), argmax })
}

pub fn ps_scan(pool: &Pool, params: &CodeParams, cap: u64) -> Result<PsScan> {
    let q = params.source_count();
    check(q, cap)?;
    let scanner = KeyScanner::new(params, cap)?;
    let parts: Vec<PsPartial> = pool.install(|| chunks(q).into_par_iter().map(|r| scanner.ps_partial(r)).collect());
    let total = parts.into_iter().fold(PsPartial::default(), PsPartial::merge);
    let argmax = total.best.ok_or(Error::EmptyRange)?;
    Ok(PsScan { value: argmax.ratio(), argmax, skipped: total.skipped })
}

/// Message counts from one key-count histogram per `m1`.
pub fn message_distribution(pool: &Pool, params: &CodeParams, cap: u64) -> Result<MessageDistribution> {
    let q = params.source_count();
    check(q, cap)?;
    let scanner = KeyScanner::new(params, cap)?;
    let parts: Vec<Vec<u64>> = pool.install(|| chunks(q).into_par_iter().map(|r| scanner.count_table(r)).collect());
    Ok(MessageDistribution::from_table(params, parts.concat())?)
}

/// Message counts from encoding every `(s, k)`.
pub fn message_distribution_by_encoding(pool: &Pool, params: &CodeParams, cap: u64) -> Result<MessageDistribution> {
    let q = params.source_count();
    check(q, cap)?;
    let parts: Vec<Vec<u64>> =
        pool.install(|| chunks(q).into_par_iter().map(|r| bounds::encoding_counts(params, r)).collect());
    let mut total = vec![0u64; params.message_count() as usize];
    for part in parts {
        total.iter_mut().zip(part).for_each(|(t, c)| *t += c);
    }
    Ok(MessageDistribution::from_table(params, total)?)
}

pub fn h_e_given_mm(pool: &Pool, params: &CodeParams, cap: u64) -> Result<f64> {
    let q = params.source_count();
    check(q, cap)?;
    let parts: Vec<Vec<u64>> =
        pool.install(|| chunks(q).into_par_iter().map(|r| bounds::message_pair_ids(params, r)).collect());
    Ok(bounds::h_e_given_mm_from_pairs(params, parts.concat()))
}

/// `S(a, b)` for every `a != 0` (outer, enumeration order from index 1) and
/// every `b` (inner).
pub fn weil_table(pool: &Pool, ctx: &FieldCtx, u: u64, cap: u64) -> Result<Vec<Vec<CyclotomicInt>>> {
    let scanner = WeilSumScanner::new(ctx, u, cap)?;
    let rows: std::result::Result<Vec<_>, _> =
        pool.install(|| (1..ctx.order()).into_par_iter().map(|ai| scanner.sums(ctx.element_at(ai))).collect());
    Ok(rows?)
}

/// Rows of the optimality table; exact quantities only within the caps.
pub fn optimality_report(
    pool: &Pool,
    p: u64,
    r: u64,
    degrees: RangeInclusive<usize>,
    caps: &Caps,
) -> Result<Vec<ReportRow>> {
    if degrees.is_empty() {
        return Err(Error::EmptyRange.into());
    }
    degrees
        .map(|n| {
            let params = CodeParams::new(make_field(p, n, None)?, r)?;
            let q = params.source_count();
            let pi = if q <= caps.scan_cap { Some(pi_scan(pool, &params, caps.scan_cap)?.value) } else { None };
            let ps = if q <= caps.ps_cap { Some(ps_scan(pool, &params, caps.ps_cap)?.value) } else { None };
            let dist =
                if q <= caps.scan_cap { Some(message_distribution(pool, &params, caps.scan_cap)?) } else { None };
            Ok(ReportRow::assemble(&params, pi, ps, dist.as_ref())?)
        })
        .collect()
}

//! Argument parsing and subcommand dispatch.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 cap or size limit
//! exceeded, 3 brute force and closed form disagree.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use weilauth_core::authcode::{
    encode, pi_closed, pi_four_case_formula, ps_bound, verify, CodeParams, KeyCountClosedForm, Message, Verdict,
};
use weilauth_core::bounds::{self, combinatorial_bound, to_f64, MessageDistribution};
use weilauth_core::charsum::{self, WeilSumParams};
use weilauth_core::field::{make_field, parse_modulus, FieldCtx};
use weilauth_core::{arith, Caps, Error};

use crate::error::{AppError, Result};
use crate::parallel::{self, Pool};
use crate::render::{self, cyclotomic, decimal, rational, Document};

/// Slack for comparisons against floating-point bounds.
const FLOAT_SLACK: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(
    name = "weilauth",
    version,
    about = "Exact Weil sums and deception probabilities of a trace-based authentication code"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Closed,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Closed => "closed",
            Method::Both => "both",
        }
    }

    fn brute(self) -> bool {
        self != Method::Closed
    }

    fn closed(self) -> bool {
        self != Method::Brute
    }
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: one per core).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
    /// Largest field order for single enumerations.
    #[arg(long, global = true, default_value_t = Caps::default().enum_cap, value_parser = clap::value_parser!(u64).range(1..))]
    pub enum_cap: u64,
    /// Largest field order for double scans (P_I, message distributions).
    #[arg(long, global = true, default_value_t = Caps::default().scan_cap, value_parser = clap::value_parser!(u64).range(1..))]
    pub scan_cap: u64,
    /// Largest field order for the P_S scan.
    #[arg(long, global = true, default_value_t = Caps::default().ps_cap, value_parser = clap::value_parser!(u64).range(1..))]
    pub ps_cap: u64,
    /// Largest field order for message-pair entropy.
    #[arg(long, global = true, default_value_t = Caps::default().pair_cap, value_parser = clap::value_parser!(u64).range(1..))]
    pub pair_cap: u64,
    /// Emit `runtime_ms: null` so output is byte-for-byte reproducible.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

impl CommonArgs {
    fn caps(&self) -> Caps {
        Caps { enum_cap: self.enum_cap, scan_cap: self.scan_cap, ps_cap: self.ps_cap, pair_cap: self.pair_cap }
    }
}

#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    #[arg(long)]
    pub p: u64,
    /// Extension degree.
    #[arg(long, visible_alias = "h")]
    pub n: usize,
    /// Monic irreducible modulus as coefficients `m0,m1,...,1`.
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct CodeArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Frobenius exponent.
    #[arg(long, visible_alias = "u")]
    pub r: u64,
}

#[derive(Debug, Clone, Args)]
pub struct MethodArg {
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    pub method: Method,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Field parameters: modulus, primitive element, basis traces.
    Field(FieldArgs),
    /// Gauss sum G_h of the quadratic character.
    Gauss {
        #[arg(long)]
        p: u64,
        #[arg(long, visible_alias = "n")]
        h: u32,
        #[command(flatten)]
        method: MethodArg,
    },
    /// Weil sum S(a, b) = sum zeta^Tr(a x^(p^u+1) + b x).
    Weil {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[command(flatten)]
        method: MethodArg,
    },
    /// Impersonation probability P_I.
    Pi {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        method: MethodArg,
    },
    /// Substitution probability P_S (brute) and its upper bound (closed).
    Ps {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        method: MethodArg,
    },
    /// Encode source s under key k.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        k: String,
        #[arg(long)]
        s: String,
    },
    /// Check message (m1, m2) under key k.
    Verify {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        k: String,
        #[arg(long)]
        m1: String,
        #[arg(long)]
        m2: String,
    },
    /// Entropies, information-theoretic bounds and their ratios.
    Entropy {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        method: MethodArg,
    },
    /// Optimality table over a range of degrees.
    Report {
        #[arg(long)]
        p: u64,
        #[arg(long, visible_alias = "u")]
        r: u64,
        #[arg(long)]
        n_from: usize,
        #[arg(long)]
        n_to: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok((text, agreement)) => {
            let code = if agreement == Some(false) { 3 } else { 0 };
            let stderr =
                if code == 3 { "error: brute force and closed form disagree\n".to_string() } else { String::new() };
            match &cli.common.out {
                Some(path) => match fs::write(path, text) {
                    Ok(()) => Outcome { code, stdout: String::new(), stderr },
                    Err(source) => {
                        let e = AppError::Io { path: path.display().to_string(), source };
                        Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") }
                    }
                },
                None => Outcome { code, stdout: text, stderr },
            }
        }
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Rendered output and the agreement flag (if both methods ran).
fn execute(cli: &Cli) -> Result<(String, Option<bool>)> {
    let started = Instant::now();
    let pool = Pool::new(cli.common.jobs.map(|j| j as usize))?;
    let caps = cli.common.caps();
    let (params, method, results, agreement) = match &cli.command {
        Command::Report { p, r, n_from, n_to } => {
            let rows = parallel::optimality_report(&pool, *p, *r, *n_from..=*n_to, &caps)?;
            if cli.common.format == Format::Csv {
                return Ok((render::report_csv(&rows)?, None));
            }
            let params = object(json!({"p": p, "r": r, "n_from": n_from, "n_to": n_to}));
            (params, None, render::report_json(&rows), None)
        }
        command => dispatch(command, &pool, &caps)?,
    };
    let runtime_ms = (!cli.common.no_timing).then(|| started.elapsed().as_millis() as u64);
    let doc = Document { params, method: method.map(|m: Method| m.name().to_string()), results, agreement, runtime_ms };
    let text = match cli.common.format {
        Format::Json => doc.to_json()?,
        Format::Csv => doc.to_csv()?,
        Format::Text => doc.to_text()?,
    };
    Ok((text, agreement))
}

type Dispatched = (Map<String, Value>, Option<Method>, Value, Option<bool>);

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("object literal"),
    }
}

/// Refuses to build a field larger than `cap` for a brute-force method, so an
/// oversized request fails with a cap error before any work is done.
fn precheck(p: u64, n: usize, cap: u64) -> Result<()> {
    match u32::try_from(n).ok().and_then(|n| arith::checked_pow(p, n)) {
        Some(size) if size <= cap => Ok(()),
        Some(size) => Err(Error::CapExceeded { size, cap }.into()),
        None => Err(Error::FieldTooLarge.into()),
    }
}

fn field_of(args: &FieldArgs) -> Result<FieldCtx> {
    let modulus = args.modulus.as_deref().map(parse_modulus).transpose()?;
    Ok(make_field(args.p, args.n, modulus.as_deref())?)
}

fn code_of(args: &CodeArgs) -> Result<CodeParams> {
    Ok(CodeParams::new(field_of(&args.field)?, args.r)?)
}

fn code_params_json(params: &CodeParams) -> Map<String, Value> {
    object(json!({
        "p": params.p(),
        "n": params.n(),
        "r": params.r(),
        "v": params.v(),
        "modulus": params.ctx().format_modulus(),
        "case_id": params.case().id(),
    }))
}

fn dispatch(command: &Command, pool: &Pool, caps: &Caps) -> Result<Dispatched> {
    match command {
        Command::Field(args) => {
            let ctx = field_of(args)?;
            let basis_traces: Vec<u32> = (0..ctx.n())
                .map(|i| {
                    let mut e = vec![0u64; ctx.n()];
                    e[i] = 1;
                    ctx.element(&e).map(|x| ctx.trace(x).value())
                })
                .collect::<std::result::Result<_, _>>()?;
            let params = object(json!({"p": ctx.p(), "n": ctx.n()}));
            let results = json!({
                "modulus": ctx.format_modulus(),
                "order": ctx.order(),
                "primitive": ctx.format_element(ctx.primitive()),
                "basis_traces": basis_traces,
            });
            Ok((params, None, results, None))
        }
        Command::Gauss { p, h, method } => {
            let method = method.method;
            let params = object(json!({"p": p, "h": h}));
            let mut results = Map::new();
            let brute = if method.brute() {
                precheck(*p, *h as usize, caps.enum_cap)?;
                let ctx = make_field(*p, *h as usize, None)?;
                Some(charsum::gauss_sum_bruteforce(&ctx, caps.enum_cap)?)
            } else {
                None
            };
            let closed = method.closed().then(|| charsum::gauss_sum_closed(*p, *h)).transpose()?;
            if let Some(b) = &brute {
                results.insert("brute".into(), cyclotomic(b));
            }
            if let Some(c) = &closed {
                results.insert("closed".into(), cyclotomic(c));
            }
            let agreement = match (&brute, &closed) {
                (Some(b), Some(c)) => Some(b == c),
                _ => None,
            };
            Ok((params, Some(method), Value::Object(results), agreement))
        }
        Command::Weil { code, a, b, method } => {
            let method = method.method;
            if method.brute() {
                precheck(code.field.p, code.field.n, caps.enum_cap)?;
            }
            let ctx = field_of(&code.field)?;
            let (a_el, b_el) = (ctx.parse_element(a)?, ctx.parse_element(b)?);
            let ws = WeilSumParams::new(&ctx, code.r, a_el, b_el)?;
            let params = object(json!({
                "p": ctx.p(),
                "h": ctx.n(),
                "u": code.r,
                "v": ws.v(),
                "modulus": ctx.format_modulus(),
                "a": ctx.format_element(a_el),
                "b": ctx.format_element(b_el),
            }));
            let brute = method.brute().then(|| charsum::weil_sum_bruteforce(&ws, caps.enum_cap)).transpose()?;
            let closed = method.closed().then(|| charsum::weil_sum_closed(&ws)).transpose()?;
            let mut results = Map::new();
            if let Some(x) = &brute {
                results.insert("brute".into(), cyclotomic(x));
            }
            if let Some(x) = &closed {
                results.insert("closed".into(), cyclotomic(x));
            }
            results.insert("permutation".into(), json!(charsum::is_permutation_f(&ctx, code.r, a_el)?));
            let agreement = match (&brute, &closed) {
                (Some(x), Some(y)) => Some(x == y),
                _ => None,
            };
            Ok((params, Some(method), Value::Object(results), agreement))
        }
        Command::Pi { code, method } => {
            let method = method.method;
            if method.brute() {
                precheck(code.field.p, code.field.n, caps.scan_cap)?;
            }
            let params = code_of(code)?;
            let ctx = params.ctx();
            let mut results = Map::new();
            let brute = if method.brute() {
                let scan = parallel::pi_scan(pool, &params, caps.scan_cap)?;
                results.insert(
                    "brute".into(),
                    json!({
                        "value": rational(scan.value),
                        "argmax": {
                            "a": ctx.format_element(ctx.element_at(scan.argmax.a_index)),
                            "b": scan.argmax.b,
                            "count": scan.argmax.count,
                        },
                    }),
                );
                Some(scan.value)
            } else {
                None
            };
            let closed = if method.closed() {
                let value = pi_closed(&params)?;
                results.insert("closed".into(), rational(value));
                results.insert("four_case_formula".into(), rational(pi_four_case_formula(&params)));
                Some(value)
            } else {
                None
            };
            let agreement = match (brute, closed) {
                (Some(x), Some(y)) => Some(x == y),
                _ => None,
            };
            Ok((code_params_json(&params), Some(method), Value::Object(results), agreement))
        }
        Command::Ps { code, method } => {
            let method = method.method;
            if method.brute() {
                precheck(code.field.p, code.field.n, caps.ps_cap)?;
            }
            let params = code_of(code)?;
            let ctx = params.ctx();
            let lower = combinatorial_bound(params.source_count(), params.message_count())?.substitution;
            let mut results = Map::new();
            results.insert("lower_bound".into(), rational(lower));
            let brute = if method.brute() {
                let scan = parallel::ps_scan(pool, &params, caps.ps_cap)?;
                let m = scan.argmax;
                results.insert(
                    "brute".into(),
                    json!({
                        "value": rational(scan.value),
                        "argmax": {
                            "a": ctx.format_element(ctx.element_at(m.a_index)),
                            "b": m.b,
                            "alpha": ctx.format_element(ctx.element_at(m.alpha_index)),
                            "beta": m.beta,
                            "joint_count": m.joint,
                            "count": m.count,
                        },
                        "skipped_empty": scan.skipped,
                    }),
                );
                Some(scan.value)
            } else {
                None
            };
            let bound = if method.closed() {
                let b = ps_bound(&params);
                results.insert("closed".into(), json!({"bound": b.value.map(decimal), "case_id": b.case.id()}));
                Some(b.value)
            } else {
                None
            };
            let agreement = match (brute, bound) {
                (Some(exact), Some(bound)) => {
                    Some(exact >= lower && bound.map_or(true, |b| to_f64(exact) <= b + FLOAT_SLACK))
                }
                _ => None,
            };
            Ok((code_params_json(&params), Some(method), Value::Object(results), agreement))
        }
        Command::Encode { code, k, s } => {
            let params = code_of(code)?;
            let ctx = params.ctx();
            let (k, s) = (ctx.parse_element(k)?, ctx.parse_element(s)?);
            let m = encode(&params, k, s);
            let mut p = code_params_json(&params);
            p.insert("k".into(), json!(ctx.format_element(k)));
            p.insert("s".into(), json!(ctx.format_element(s)));
            let results = json!({"m1": ctx.format_element(m.m1), "m2": m.m2.value()});
            Ok((p, None, results, None))
        }
        Command::Verify { code, k, m1, m2 } => {
            let params = code_of(code)?;
            let ctx = params.ctx();
            let k = ctx.parse_element(k)?;
            let m = Message { m1: ctx.parse_element(m1)?, m2: ctx.parse_prime(m2)? };
            let mut p = code_params_json(&params);
            p.insert("k".into(), json!(ctx.format_element(k)));
            p.insert("m1".into(), json!(ctx.format_element(m.m1)));
            p.insert("m2".into(), json!(m.m2.value()));
            let results = match verify(&params, k, m) {
                Verdict::Accept(s) => json!({"accepted": true, "source": ctx.format_element(s)}),
                Verdict::Reject => json!({"accepted": false, "source": null}),
            };
            Ok((p, None, results, None))
        }
        Command::Entropy { code, method } => entropy(code, method.method, pool, caps),
        Command::Report { .. } => unreachable!("handled by execute"),
    }
}

/// Message counts from the closed-form key counts.
fn closed_distribution(params: &CodeParams) -> Result<MessageDistribution> {
    let closed = KeyCountClosedForm::new(params)?;
    let table = params.ctx().enumerate(params.source_count())?.flat_map(|a| closed.counts(a)).collect();
    Ok(MessageDistribution::from_table(params, table)?)
}

fn entropy(code: &CodeArgs, method: Method, pool: &Pool, caps: &Caps) -> Result<Dispatched> {
    precheck(code.field.p, code.field.n, caps.scan_cap)?;
    let params = code_of(code)?;
    let q = params.source_count();
    let brute =
        method.brute().then(|| parallel::message_distribution_by_encoding(pool, &params, caps.scan_cap)).transpose()?;
    let closed = method.closed().then(|| closed_distribution(&params)).transpose()?;
    let agreement = match (&brute, &closed) {
        (Some(x), Some(y)) => Some(x == y),
        _ => None,
    };
    let dist = brute.as_ref().or(closed.as_ref()).expect("at least one method");
    let pi = match method {
        Method::Closed => pi_closed(&params)?,
        _ => parallel::pi_scan(pool, &params, caps.scan_cap)?.value,
    };
    let ps = (q <= caps.ps_cap).then(|| parallel::ps_scan(pool, &params, caps.ps_cap)).transpose()?.map(|s| s.value);
    let hmm = (q <= caps.pair_cap).then(|| parallel::h_e_given_mm(pool, &params, caps.pair_cap)).transpose()?;
    let report = bounds::EntropyReport::new(&params, dist, hmm, pi, ps)?;
    let comb = combinatorial_bound(q, params.message_count())?;
    let histogram: Vec<[u64; 2]> = dist.histogram().into_iter().map(|(c, m)| [c, m]).collect();
    let results = json!({
        "h_e": decimal(report.h_e),
        "h_e_given_m": decimal(report.h_e_given_m),
        "h_e_given_mm": report.h_e_given_mm.map(decimal),
        "q_i": decimal(report.q_i),
        "q_s": report.q_s.map(decimal),
        "pi": rational(report.pi_value),
        "ps_exact": report.ps_value.map(rational),
        "R": rational(comb.impersonation),
        "P": rational(comb.substitution),
        "ratio_q_pi": decimal(report.ratio_q_pi),
        "ratio_R_pi": decimal(report.ratio_r_pi),
        "ratio_P_ps": report.ratio_p_ps.map(decimal),
        "count_histogram": histogram,
    });
    Ok((code_params_json(&params), Some(method), results, agreement))
}

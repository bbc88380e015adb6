//! JSON, CSV and text output.

use serde::Serialize;
use serde_json::{json, Map, Value};
use weilauth_core::bounds::{to_f64, ReportRow};
use weilauth_core::cyclotomic::CyclotomicInt;
use weilauth_core::Rational;

use crate::error::Result;

/// Display decimals are rounded to 12 places so approximations print stably.
pub fn decimal(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let rounded = (x * 1e12).round() / 1e12;
    json!(if rounded == 0.0 { 0.0 } else { rounded })
}

pub fn rational(x: Rational) -> Value {
    json!({ "num": x.numer(), "den": x.denom(), "decimal": decimal(to_f64(x)) })
}

pub fn cyclotomic(x: &CyclotomicInt) -> Value {
    let z = x.to_complex();
    json!({
        "coeffs": x.coeffs(),
        "integer": x.as_integer(),
        "re": decimal(z.re),
        "im": decimal(z.im),
    })
}

/// The top-level output object.
#[derive(Debug, Clone, Serialize)]
pub struct Document {
    pub params: Map<String, Value>,
    pub method: Option<String>,
    pub results: Value,
    pub agreement: Option<bool>,
    pub runtime_ms: Option<u64>,
}

impl Document {
    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    /// Two-column `key,value` CSV of the flattened document.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["key", "value"])?;
        for (k, v) in self.flattened()? {
            w.write_record([k, v])?;
        }
        Ok(String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("utf-8 csv"))
    }

    pub fn to_text(&self) -> Result<String> {
        Ok(self.flattened()?.into_iter().map(|(k, v)| format!("{k}: {v}\n")).collect())
    }

    fn flattened(&self) -> Result<Vec<(String, String)>> {
        let mut out = Vec::new();
        flatten("", &serde_json::to_value(self)?, &mut out);
        Ok(out)
    }
}

fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match value {
        Value::Object(map) => map.iter().for_each(|(k, v)| flatten(&join(k), v, out)),
        Value::Array(items) => items.iter().enumerate().for_each(|(i, v)| flatten(&join(&i.to_string()), v, out)),
        Value::Null => out.push((prefix.to_string(), String::new())),
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

pub const REPORT_COLUMNS: [&str; 21] = [
    "p",
    "n",
    "r",
    "v",
    "case_id",
    "pi_num",
    "pi_den",
    "pi_closed_num",
    "pi_closed_den",
    "ps_exact_num",
    "ps_exact_den",
    "ps_bound",
    "R_num",
    "R_den",
    "P_num",
    "P_den",
    "h_e",
    "h_e_given_m",
    "q_i",
    "ratio_R_pi",
    "ratio_q_pi",
];

fn cell<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn report_cells(row: &ReportRow) -> Vec<String> {
    vec![
        row.p.to_string(),
        row.n.to_string(),
        row.r.to_string(),
        row.v.to_string(),
        row.case.id().to_string(),
        cell(row.pi_exact.map(|x| *x.numer())),
        cell(row.pi_exact.map(|x| *x.denom())),
        row.pi_closed.numer().to_string(),
        row.pi_closed.denom().to_string(),
        cell(row.ps_exact.map(|x| *x.numer())),
        cell(row.ps_exact.map(|x| *x.denom())),
        cell(row.ps_bound),
        row.comb.impersonation.numer().to_string(),
        row.comb.impersonation.denom().to_string(),
        row.comb.substitution.numer().to_string(),
        row.comb.substitution.denom().to_string(),
        row.h_e.to_string(),
        cell(row.h_e_given_m),
        cell(row.q_i),
        to_f64(row.ratio_r_pi).to_string(),
        cell(row.ratio_q_pi),
    ]
}

/// The optimality table with the fixed column set; capped cells are empty.
pub fn report_csv(rows: &[ReportRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(REPORT_COLUMNS)?;
    for row in rows {
        w.write_record(report_cells(row))?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("utf-8 csv"))
}

pub fn report_json(rows: &[ReportRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| {
                json!({
                    "p": row.p,
                    "n": row.n,
                    "r": row.r,
                    "v": row.v,
                    "case_id": row.case.id(),
                    "pi_exact": row.pi_exact.map(rational),
                    "pi_closed": rational(row.pi_closed),
                    "ps_exact": row.ps_exact.map(rational),
                    "ps_bound": row.ps_bound.map(decimal),
                    "R": rational(row.comb.impersonation),
                    "P": rational(row.comb.substitution),
                    "h_e": decimal(row.h_e),
                    "h_e_given_m": row.h_e_given_m.map(decimal),
                    "q_i": row.q_i.map(decimal),
                    "ratio_R_pi": rational(row.ratio_r_pi),
                    "ratio_q_pi": row.ratio_q_pi.map(decimal),
                })
            })
            .collect(),
    )
}

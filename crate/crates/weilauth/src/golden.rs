//! Golden value files: CSV rows `p,n,r,method,value_num,value_den`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use weilauth_core::Rational;

use crate::error::{AppError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRow {
    pub p: u32,
    pub n: usize,
    pub r: u64,
    pub method: String,
    pub value_num: u64,
    pub value_den: u64,
}

impl GoldenRow {
    pub fn new(p: u32, n: usize, r: u64, method: &str, value: Rational) -> Self {
        GoldenRow { p, n, r, method: method.to_string(), value_num: *value.numer(), value_den: *value.denom() }
    }

    /// A real value stored as a fraction over `10^12`.
    pub fn approx(p: u32, n: usize, r: u64, method: &str, value: f64) -> Self {
        const SCALE: u64 = 1_000_000_000_000;
        GoldenRow {
            p,
            n,
            r,
            method: method.to_string(),
            value_num: (value * SCALE as f64).round() as u64,
            value_den: SCALE,
        }
    }
}

pub fn read(path: &Path) -> Result<Vec<GoldenRow>> {
    let mut r = csv::Reader::from_path(path)?;
    Ok(r.deserialize().collect::<std::result::Result<_, _>>()?)
}

pub fn write(path: &Path, rows: &[GoldenRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    fs::write(path, bytes).map_err(|source| AppError::Io { path: path.display().to_string(), source })
}

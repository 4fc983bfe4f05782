//! Comparison sweeps and bound certificates shared by the CLI, the
//! acceptance run and the benches.
//!
//! Rows are computed through [`crate::exec::map`], then sorted, so the
//! output does not depend on the execution policy or thread count.

use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::mcmahon::{delta_bound, delta_threshold, leading_term, mcmahon_zero};
use crate::oracle::{kth_zero_with, oracle_estimate};
use crate::specfun::bessel_j_deriv;
use crate::uniform::large_nu_zero;
use crate::zero::{Method, ZeroEstimate, ZeroQuery};
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::PathBuf;

pub const CSV_HEADER: &str = "d,nu,k,method,estimate,oracle,abs_error,bound,applicable,pass";

/// Label used for grid-certificate rows.
pub const DELTA_METHOD: &str = "delta-bound";

/// One line of a sweep or certificate.
///
/// For zero comparisons `k` is the index argument of the estimator; for
/// amplitude certificates it carries the abscissa x.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertRecord {
    pub d: u32,
    pub nu: f64,
    pub k: f64,
    pub method: String,
    pub estimate: f64,
    pub oracle: f64,
    pub abs_error: f64,
    pub bound: Option<f64>,
    pub applicable: bool,
    pub pass: bool,
}

impl CertRecord {
    fn new(d: u32, nu: f64, k: f64, method: String, estimate: f64, oracle: f64, bound: Option<f64>) -> Self {
        let abs_error = (estimate - oracle).abs();
        let applicable = bound.is_some();
        let pass = match bound {
            Some(b) => abs_error <= b,
            None => true,
        };
        CertRecord { d, nu, k, method, estimate, oracle, abs_error, bound, applicable, pass }
    }

    fn sort_key(&self, o: &Self) -> Ordering {
        self.d
            .cmp(&o.d)
            .then(self.nu.total_cmp(&o.nu))
            .then(self.k.total_cmp(&o.k))
            .then(self.method.cmp(&o.method))
    }

    pub fn csv_line(&self) -> String {
        let bound = self.bound.map(fmt_g17).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.d,
            fmt_g17(self.nu),
            fmt_g17(self.k),
            self.method,
            fmt_g17(self.estimate),
            fmt_g17(self.oracle),
            fmt_g17(self.abs_error),
            bound,
            self.applicable,
            self.pass
        )
    }
}

/// `%.17g`: 17 significant digits, trailing zeros dropped, exponent form
/// outside [1e-5, 1e17).
pub fn fmt_g17(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let e = format!("{v:.16e}");
    let (mant, exp) = e.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..17).contains(&exp) {
        let mant = trim_zeros(mant);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{mant}e{sign}{:02}", exp.abs());
    }
    let decimals = (16 - exp).max(0) as usize;
    trim_zeros(&format!("{v:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Zero-comparison sweep: every (d, ν, k, method) combination.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub d_list: Vec<u32>,
    pub nu_list: Vec<f64>,
    pub k_min: u32,
    pub k_max: u32,
    pub methods: Vec<Method>,
    pub format: Format,
    pub output: Option<PathBuf>,
    /// None: all cores.
    pub threads: Option<usize>,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.d_list.is_empty() {
            return Err(Error::Config("empty derivative-order list".into()));
        }
        if self.nu_list.is_empty() {
            return Err(Error::Config("empty order list".into()));
        }
        if self.methods.is_empty() {
            return Err(Error::Config("empty method list".into()));
        }
        if self.k_min < 1 || self.k_min > self.k_max {
            return Err(Error::Config(format!("bad index range {}..={}", self.k_min, self.k_max)));
        }
        if let Some(nu) = self.nu_list.iter().find(|v| !v.is_finite()) {
            return Err(Error::Config(format!("order {nu} is not finite")));
        }
        if self.threads == Some(0) {
            return Err(Error::Config("thread count must be positive".into()));
        }
        Ok(())
    }
}

/// Amplitude-remainder certificate on a uniform x grid.
#[derive(Clone, Debug, PartialEq)]
pub struct CertifyConfig {
    pub d_list: Vec<u32>,
    pub nu_list: Vec<f64>,
    pub x_min: f64,
    pub x_max: f64,
    pub points: usize,
}

impl CertifyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.d_list.is_empty() || self.nu_list.is_empty() {
            return Err(Error::Config("empty derivative-order or order list".into()));
        }
        if !(self.x_min > 0.0 && self.x_min <= self.x_max && self.x_max.is_finite()) {
            return Err(Error::Config(format!("bad x range [{}, {}]", self.x_min, self.x_max)));
        }
        if self.points == 0 || (self.points == 1 && self.x_min != self.x_max) {
            return Err(Error::Config(format!("need at least 2 grid points for [{}, {}]", self.x_min, self.x_max)));
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        if self.points == 1 {
            return vec![self.x_min];
        }
        let step = (self.x_max - self.x_min) / (self.points - 1) as f64;
        (0..self.points)
            .map(|i| if i + 1 == self.points { self.x_max } else { self.x_min + i as f64 * step })
            .collect()
    }
}

/// Any estimator by name.
pub fn estimate(q: &ZeroQuery, method: Method) -> Result<ZeroEstimate> {
    match method {
        Method::Mcmahon(t) => mcmahon_zero(q, t.into()),
        Method::LargeNu(t) => large_nu_zero(q, t),
        Method::Oracle => oracle_estimate(q),
    }
}

/// Rows of a comparison sweep, sorted by (d, ν, k, method).  Oracle zeros
/// are computed once per (d, ν, target index) and shared between methods.
/// Combinations outside a method's regime yield a row with NaN estimate,
/// `applicable = false` and `pass = true`, plus a note in the second list.
pub fn compare(cfg: &SweepConfig, exec: Exec) -> Result<(Vec<CertRecord>, Vec<String>)> {
    cfg.validate()?;
    let mut jobs = Vec::new();
    for &d in &cfg.d_list {
        for &nu in &cfg.nu_list {
            for k in cfg.k_min..=cfg.k_max {
                for &m in &cfg.methods {
                    jobs.push((d, nu, k, m));
                }
            }
        }
    }
    let estimates = exec::map(exec, &jobs, |&(d, nu, k, m)| ZeroQuery::new(d, nu, k).and_then(|q| estimate(&q, m)));

    let mut targets: BTreeMap<(u32, u64, u32), Option<f64>> = BTreeMap::new();
    for e in estimates.iter().flatten() {
        let q = e.query;
        targets.insert((q.n, q.nu.to_bits(), e.target_index), None);
    }
    let keys: Vec<_> = targets.keys().copied().collect();
    let values = exec::map(exec, &keys, |&(d, nu, t)| kth_zero_with(Exec::Sequential, d, f64::from_bits(nu), t as usize));
    for (key, v) in keys.iter().zip(values) {
        targets.insert(*key, Some(v?));
    }

    let mut rows = Vec::with_capacity(jobs.len());
    let mut notes = Vec::new();
    for (&(d, nu, k, m), est) in jobs.iter().zip(estimates) {
        match est {
            Ok(e) => {
                let oracle = targets[&(d, nu.to_bits(), e.target_index)].expect("oracle filled");
                let bound = if e.applicable { e.bound } else { None };
                rows.push(CertRecord::new(d, nu, k as f64, m.to_string(), e.value, oracle, bound));
            }
            Err(err @ (Error::Regime(_) | Error::Applicability(_) | Error::CapExceeded { .. })) => {
                notes.push(format!("d={d} nu={nu} k={k} {m}: {err}"));
                rows.push(CertRecord {
                    d,
                    nu,
                    k: k as f64,
                    method: m.to_string(),
                    estimate: f64::NAN,
                    oracle: f64::NAN,
                    abs_error: f64::NAN,
                    bound: None,
                    applicable: false,
                    pass: true,
                });
            }
            Err(err) => return Err(err),
        }
    }
    rows.sort_by(CertRecord::sort_key);
    Ok((rows, notes))
}

/// |√(πx/2)·J^(d)_ν(x) − leading term|.
pub fn measured_delta(d: u32, nu: f64, x: f64) -> Result<f64> {
    let j = bessel_j_deriv(d, nu, x)?;
    Ok(((PI * x / 2.0).sqrt() * j - leading_term(d, nu, x)).abs())
}

/// Grid rows: estimate = √(πx/2)J^(d)_ν(x), oracle = leading term, so
/// abs_error is the measured remainder; bound = B(d, ν, x) where its
/// ν-threshold holds (rows below it are inapplicable and noted).
pub fn certify(cfg: &CertifyConfig, exec: Exec) -> Result<(Vec<CertRecord>, Vec<String>)> {
    cfg.validate()?;
    let grid = cfg.grid();
    let mut jobs = Vec::new();
    for &d in &cfg.d_list {
        for &nu in &cfg.nu_list {
            for &x in &grid {
                jobs.push((d, nu, x));
            }
        }
    }
    let rows = exec::map(exec, &jobs, |&(d, nu, x)| -> Result<CertRecord> {
        let j = bessel_j_deriv(d, nu, x)?;
        let est = (PI * x / 2.0).sqrt() * j;
        let bound = match delta_bound(d, nu, x) {
            Ok(b) => Some(b),
            Err(Error::Precondition { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(CertRecord::new(d, nu, x, DELTA_METHOD.into(), est, leading_term(d, nu, x), bound))
    });
    let mut rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    let mut notes = Vec::new();
    for &d in &cfg.d_list {
        for &nu in &cfg.nu_list {
            let req = delta_threshold(d);
            if nu < req {
                notes.push(format!("d={d} nu={nu}: below the bound's threshold nu >= {req}; rows not applicable"));
            } else if nu - req < 1.5 {
                notes.push(format!("d={d} nu={nu}: within 1.5 of the bound's threshold nu >= {req}"));
            }
        }
    }
    rows.sort_by(CertRecord::sort_key);
    Ok((rows, notes))
}

/// True when every applicable row passes.
pub fn all_pass(rows: &[CertRecord]) -> bool {
    rows.iter().all(|r| r.pass)
}

/// CSV text with header and trailing newline.
pub fn to_csv(rows: &[CertRecord]) -> String {
    let mut s = String::with_capacity(64 * (rows.len() + 1));
    s.push_str(CSV_HEADER);
    s.push('\n');
    for r in rows {
        let _ = writeln!(s, "{}", r.csv_line());
    }
    s
}

pub fn to_json(rows: &[CertRecord]) -> String {
    serde_json::to_string_pretty(rows).expect("records serialize")
}

pub fn render(rows: &[CertRecord], format: Format) -> String {
    match format {
        Format::Csv => to_csv(rows),
        Format::Json => to_json(rows) + "\n",
    }
}

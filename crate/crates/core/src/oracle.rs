//! Brute-force zeros of J^(n)_ν: sign-change scan plus bracketed refinement.
//!
//! The scan covers (max(0.05, ν/10), x_max] on a uniform grid, densified ×8
//! on [0.9ν, 1.1ν] where zeros crowd at large ν.  For ν < n + 1 a
//! geometric grid is prepended below that start, since the first zero leaves
//! the origin as ν rises past n − 1.

use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::mcmahon::phase;
use crate::specfun::{j_deriv_unchecked, DERIV_CAP};
use crate::zero::{Method, ZeroEstimate, ZeroQuery};
use serde::Serialize;
use std::f64::consts::PI;

pub const MAX_RESOLUTION: f64 = PI / 8.0;
const DENSIFY: f64 = 8.0;
const PREFIX_DECADES: i32 = 12;
const PREFIX_PER_DECADE: i32 = 24;
const MAX_REFINE: usize = 300;

/// Zeros of J^(n)_ν in increasing order; `zeros[k-1]` is the k-th positive
/// zero.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZeroList {
    pub n: u32,
    pub nu: f64,
    pub x_max: f64,
    pub zeros: Vec<f64>,
    /// Resolution warnings (zeros closer than two grid cells).
    pub warnings: Vec<String>,
}

impl ZeroList {
    /// 1-based access.
    pub fn get(&self, k: usize) -> Option<f64> {
        k.checked_sub(1).and_then(|i| self.zeros.get(i).copied())
    }
}

/// Scans need ν ≥ n − 1 (where all zeros are real and simple) or ν ≥ 0;
/// in the latter case only the real zeros are listed and the index
/// conventions of the expansions do not apply.
fn check_regime(n: u32, nu: f64) -> Result<()> {
    if n > DERIV_CAP {
        return Err(Error::CapExceeded { n, cap: DERIV_CAP });
    }
    let required = (n as f64 - 1.0).min(0.0);
    if !nu.is_finite() || nu < required {
        return Err(Error::Precondition { what: format!("zero scan of J^({n}) at nu={nu}"), required });
    }
    Ok(())
}

/// Lower end of the uniform part of the scan.
pub fn scan_start(nu: f64) -> f64 {
    (0.1 * nu).max(0.05)
}

fn grid(n: u32, nu: f64, x_max: f64, h: f64) -> Vec<f64> {
    let lo = scan_start(nu);
    let mut xs = Vec::new();
    if nu < n as f64 + 1.0 {
        let total = PREFIX_DECADES * PREFIX_PER_DECADE;
        for i in 0..total {
            let e = (i - total) as f64 / PREFIX_PER_DECADE as f64;
            xs.push(lo * 10f64.powf(e));
        }
    }
    let (d_lo, d_hi) = (0.9 * nu, 1.1 * nu);
    let cells = ((x_max - lo) / h).ceil() as usize;
    for i in 0..cells {
        let a = lo + i as f64 * h;
        let b = (a + h).min(x_max);
        let sub = if b > d_lo && a < d_hi { DENSIFY as usize } else { 1 };
        for j in 0..sub {
            let x = a + (b - a) * j as f64 / sub as f64;
            if xs.last().map_or(true, |&p| x > p) {
                xs.push(x);
            }
        }
    }
    xs.push(x_max);
    xs
}

/// Safeguarded secant (Illinois) on a bracket with f(a)·f(b) < 0, falling
/// back to bisection when the secant step stalls.
pub(crate) fn refine(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return a;
    }
    if fb == 0.0 {
        return b;
    }
    let mut side = 0i8;
    for _ in 0..MAX_REFINE {
        let width = b - a;
        if width <= 4.0 * f64::EPSILON * b.abs().max(f64::MIN_POSITIVE) {
            break;
        }
        let mut c = (a * fb - b * fa) / (fb - fa);
        // keep the secant point well inside; otherwise bisect
        if !(c > a + 0.01 * width && c < b - 0.01 * width) {
            c = 0.5 * (a + b);
        }
        if c <= a || c >= b {
            break;
        }
        let fc = f(c);
        if fc == 0.0 {
            return c;
        }
        if (fc < 0.0) == (fa < 0.0) {
            a = c;
            fa = fc;
            if side == -1 {
                fb *= 0.5;
            }
            side = -1;
        } else {
            b = c;
            fb = fc;
            if side == 1 {
                fa *= 0.5;
            }
            side = 1;
        }
    }
    if fa.abs() < fb.abs() {
        a
    } else {
        b
    }
}

pub fn scan_zeros(n: u32, nu: f64, x_max: f64, resolution: f64) -> Result<ZeroList> {
    scan_zeros_with(Exec::default(), n, nu, x_max, resolution)
}

/// All zeros of J^(n)_ν in the scan range up to `x_max`.
pub fn scan_zeros_with(exec: Exec, n: u32, nu: f64, x_max: f64, resolution: f64) -> Result<ZeroList> {
    check_regime(n, nu)?;
    if !(resolution > 0.0 && resolution <= MAX_RESOLUTION) {
        return Err(Error::Config(format!("resolution {resolution} must lie in (0, pi/8]")));
    }
    if !(x_max.is_finite() && x_max > scan_start(nu)) {
        return Err(Error::Config(format!("x_max={x_max} must exceed the scan start {}", scan_start(nu))));
    }
    let f = |x: f64| j_deriv_unchecked(n, nu, x);
    let xs = grid(n, nu, x_max, resolution);
    let fs = exec::map(exec, &xs, |&x| f(x));

    // brackets between consecutive nonzero samples of opposite sign
    let mut brackets = Vec::new();
    let mut last: Option<usize> = None;
    for (i, &v) in fs.iter().enumerate() {
        if v == 0.0 || v.is_nan() {
            continue;
        }
        if let Some(j) = last {
            if (fs[j] < 0.0) != (v < 0.0) {
                brackets.push((xs[j], xs[i]));
            }
        }
        last = Some(i);
    }
    let zeros = exec::map(exec, &brackets, |&(a, b)| refine(f, a, b));

    let mut warnings = Vec::new();
    for w in zeros.windows(2) {
        let cell = if w[0] >= 0.9 * nu && w[0] < 1.1 * nu { resolution / DENSIFY } else { resolution };
        if w[1] - w[0] < 2.0 * cell {
            warnings.push(format!("zeros at {} and {} are closer than two grid cells", w[0], w[1]));
        }
    }
    Ok(ZeroList { n, nu, x_max, zeros, warnings })
}

/// The k-th positive zero of J^(n)_ν (k = 1 is the smallest).  The scan
/// range starts at phase(n, ν, k) + 4π and is doubled until k zeros are
/// found.
pub fn kth_zero(q: &ZeroQuery) -> Result<f64> {
    kth_zero_with(Exec::default(), q.n, q.nu, q.k as usize)
}

pub fn kth_zero_with(exec: Exec, n: u32, nu: f64, k: usize) -> Result<f64> {
    ZeroQuery::new(n, nu, k.try_into().unwrap_or(u32::MAX))?;
    let mut x_max = phase(n, nu, k as u32) + 4.0 * PI;
    let mut last_count = 0;
    for _ in 0..8 {
        let list = scan_zeros_with(exec, n, nu, x_max, MAX_RESOLUTION)?;
        if let Some(z) = list.get(k) {
            return Ok(z);
        }
        last_count = list.zeros.len();
        x_max *= 2.0;
    }
    Err(Error::NotFound(format!(
        "only {last_count} zeros of J^({n})_{nu} below {x_max}; wanted k={k}"
    )))
}

/// Oracle value for the k-th positive zero.
pub fn oracle_estimate(q: &ZeroQuery) -> Result<ZeroEstimate> {
    let value = kth_zero(q)?;
    Ok(ZeroEstimate {
        query: *q,
        target_index: q.k,
        value,
        method: Method::Oracle,
        bound: None,
        applicable: false,
    })
}

/// The first `count` zeros a_i of J^(n) and the first count+1 zeros b_i of
/// J^(n+1) satisfy b_i < a_i < b_{i+1}.  At ν = n the origin is a zero of
/// J^(n+1) and is counted as b_1.
pub fn check_interlacing(n: u32, nu: f64, count: usize) -> bool {
    interlacing_with(Exec::default(), n, nu, count).unwrap_or(false)
}

pub fn interlacing_with(exec: Exec, n: u32, nu: f64, count: usize) -> Result<bool> {
    if count == 0 {
        return Ok(true);
    }
    let a = first_zeros(exec, n, nu, count)?;
    let b = if nu == n as f64 {
        let mut b = vec![0.0];
        b.extend(first_zeros(exec, n + 1, nu, count)?);
        b
    } else {
        first_zeros(exec, n + 1, nu, count + 1)?
    };
    Ok((0..count).all(|i| b[i] < a[i] && a[i] < b[i + 1]))
}

fn first_zeros(exec: Exec, n: u32, nu: f64, count: usize) -> Result<Vec<f64>> {
    let mut x_max = phase(n, nu, count as u32) + 4.0 * PI;
    for _ in 0..8 {
        let list = scan_zeros_with(exec, n, nu, x_max, MAX_RESOLUTION)?;
        if list.zeros.len() >= count {
            return Ok(list.zeros[..count].to_vec());
        }
        x_max *= 2.0;
    }
    Err(Error::NotFound(format!("fewer than {count} zeros of J^({n})_{nu}")))
}

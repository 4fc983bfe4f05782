//! Large-k zero expansions at fixed ν and their error bounds.
//!
//! Phase constants: α = (k + ν/2 − 1/4)π for even derivative orders and
//! β = (k + ν/2 − 3/4)π for odd ones.  The phase with index argument k
//! approximates the zero at position [`target_index`] among the positive
//! zeros of J^(d)_ν.

mod inversion;

pub use inversion::CubicForm;

use crate::error::{Error, Result};
use crate::polycoeff::{shared_table, NuPoly, N_CAP};
use crate::zero::{Method, ZeroEstimate, ZeroQuery};
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Constants of the certified zero-error bound.
pub const BOUND_FACTOR: f64 = 0.26;
pub const BOUND_SHIFT: f64 = 0.314;
pub const THRESHOLD_FACTOR: f64 = 21.0 / PI;

/// Highest correction power kept: c₁/P and c₃/P³ (and c₅ for diagnostics).
const SERIES_LEN: usize = 7;

pub fn phase(n: u32, nu: f64, k: u32) -> f64 {
    let shift = if n % 2 == 0 { 0.25 } else { 0.75 };
    PI * (k as f64 + 0.5 * nu - shift)
}

/// Position (1-based, positive zeros only) of the zero approximated by the
/// phase with index argument k.
///
/// J^(d)_ν has ⌊d/2⌋ zeros in front of the McMahon-labelled ones for
/// ν > d − 1; at ν = d − 1 one of them sits at the origin.
pub fn target_index(q: &ZeroQuery) -> u32 {
    q.k + q.n / 2 - u32::from(q.origin_is_zero())
}

/// Exact correction coefficients for derivative order d: entry i multiplies
/// P^{−i} (only odd i are nonzero).
pub fn correction_coefficients(d: u32) -> Result<&'static [NuPoly]> {
    static CACHE: OnceLock<Vec<Vec<NuPoly>>> = OnceLock::new();
    if d as usize > N_CAP {
        return Err(Error::CapExceeded { n: d, cap: N_CAP as u32 });
    }
    let all = CACHE.get_or_init(|| {
        let t = shared_table();
        (0..=N_CAP).map(|d| inversion::correction_series(t, d, SERIES_LEN)).collect()
    });
    Ok(&all[d as usize])
}

/// Closed-form cubic candidates for d, each with whether it equals the
/// coefficient from the exact inversion.
pub fn cubic_candidates(d: u32) -> Result<Vec<(CubicForm, NuPoly, bool)>> {
    let c3 = &correction_coefficients(d)?[3];
    let t = shared_table();
    Ok(CubicForm::for_parity(d as usize)
        .iter()
        .map(|&f| {
            let p = f.evaluate(t, d as usize);
            let ok = &p == c3;
            (f, p, ok)
        })
        .collect())
}

/// McMahon estimate with `terms` ∈ {1, 2, 3}: the phase, then the 1/P and
/// 1/P³ corrections.  The residual of the t-term estimate is O(P^{1−2t}).
///
/// The single-term estimate is the phase itself and carries the certified
/// bound of [`zero_error_bound`] when applicable; higher-term estimates
/// carry no bound.
pub fn mcmahon_zero(q: &ZeroQuery, terms: u32) -> Result<ZeroEstimate> {
    if !(1..=3).contains(&terms) {
        return Err(Error::Config(format!("terms={terms} must be 1, 2 or 3")));
    }
    let q = ZeroQuery::new(q.n, q.nu, q.k)?;
    if terms == 1 {
        return Ok(zero_error_bound(&q));
    }
    let c = correction_coefficients(q.n)?;
    let p = phase(q.n, q.nu, q.k);
    let inv = 1.0 / p;
    let mut corr = c[1].eval(q.nu) * inv;
    if terms == 3 {
        corr += c[3].eval(q.nu) * inv * inv * inv;
    }
    Ok(ZeroEstimate {
        query: q,
        target_index: target_index(&q),
        value: p + corr,
        method: Method::Mcmahon(terms as u8),
        bound: None,
        applicable: false,
    })
}

/// Smallest admissible index argument for the certified bound:
/// −ν/2 + 0.314 + (21/π)((ν+d)² − 1/4).
pub fn bound_threshold(d: u32, nu: f64) -> f64 {
    let s = nu + d as f64;
    -0.5 * nu + BOUND_SHIFT + THRESHOLD_FACTOR * (s * s - 0.25)
}

/// Phase estimate with its certified radius
/// 0.26·(4(ν+d)² − 1)/(π(k + ν/2 − 0.314)) when k reaches the threshold
/// and ν ≥ d − 1.
pub fn zero_error_bound(q: &ZeroQuery) -> ZeroEstimate {
    let d = q.n as f64;
    let s = q.nu + d;
    let applicable = q.nu >= d - 1.0 && q.k as f64 >= bound_threshold(q.n, q.nu);
    let radius = BOUND_FACTOR * (4.0 * s * s - 1.0) / (PI * (q.k as f64 + 0.5 * q.nu - BOUND_SHIFT));
    let applicable = applicable && radius > 0.0;
    ZeroEstimate {
        query: *q,
        target_index: target_index(q),
        value: phase(q.n, q.nu, q.k),
        method: Method::Mcmahon(1),
        bound: applicable.then_some(radius),
        applicable,
    }
}

/// Stated lower limit on ν for the amplitude bound: −d + 1/2 for even d,
/// −d + 5/2 for odd d.  See [`delta_bound_proved`] for where it is
/// actually established.
pub fn delta_threshold(d: u32) -> f64 {
    let n2 = 2.0 * (d / 2) as f64;
    if d % 2 == 0 {
        -n2 + 0.5
    } else {
        -n2 + 1.5
    }
}

/// True when every shifted order ν − d + 2m in the binomial sum for
/// J^(d) is at least 1/2 (ν ≥ d + 1/2), which is what the termwise
/// argument behind [`delta_bound`] uses.  Below this the bound is
/// empirical only, and near the even-order threshold it fails outright
/// (e.g. d = 6, ν = −5.5 gives B = 0 but a nonzero remainder).
pub fn delta_bound_proved(d: u32, nu: f64) -> bool {
    nu >= d as f64 + 0.5
}

/// B(d, ν, x) = (4(ν+d)² − 1)/(4x) · exp((4(ν+d)² − 1)/(4x)), bounding
/// |√(πx/2)·J^(d)_ν(x) − leading_term(d, ν, x)|.
pub fn delta_bound(d: u32, nu: f64, x: f64) -> Result<f64> {
    if !(x > 0.0 && x.is_finite() && nu.is_finite()) {
        return Err(Error::Domain(format!("delta_bound needs finite nu and x > 0 (nu={nu}, x={x})")));
    }
    let req = delta_threshold(d);
    if nu < req {
        return Err(Error::Precondition {
            what: format!("amplitude bound for derivative order {d} at nu={nu}"),
            required: req,
        });
    }
    let s = nu + d as f64;
    let a = (4.0 * s * s - 1.0) / (4.0 * x);
    Ok(a * a.exp())
}

/// Leading trigonometric term α_{0,d}·T(ω) of √(πx/2)·J^(d)_ν(x):
/// cos ω, −sin ω, −cos ω, sin ω for d ≡ 0, 1, 2, 3 (mod 4).
pub fn leading_term(d: u32, nu: f64, x: f64) -> f64 {
    let w = x - 0.5 * nu * PI - 0.25 * PI;
    match d % 4 {
        0 => w.cos(),
        1 => -w.sin(),
        2 => -w.cos(),
        _ => w.sin(),
    }
}

//! The turning-point variable ζ(x) and the amplitudes built on it.
//!
//! For 0 < x ≤ 1, (2/3)ζ^{3/2} = ln((1 + √(1−x²))/x) − √(1−x²); for
//! x ≥ 1, (2/3)(−ζ)^{3/2} = √(x²−1) − arcsec x.  Everything is computed in
//! w = 1 − x so that the neighbourhood of the turning point keeps full
//! relative accuracy.

use crate::error::{domain, Error, Result};

const CBRT2: f64 = 1.259_921_049_894_873_2;

/// Maclaurin coefficients of R(ζ) = (1 − x²)/ζ: 2^{2/3}, −(8/5)·2^{−2/3},
/// 52/175.
pub const R0: f64 = CBRT2 * CBRT2;
pub const R1: f64 = -1.6 / (CBRT2 * CBRT2);
pub const R2: f64 = 52.0 / 175.0;

const SERIES_SWITCH: f64 = 0.6;
const MAX_NEWTON: usize = 50;

/// Half-width of the window around ζ = 0 where cancellation-prone
/// quantities are interpolated from nodes outside it.
pub(crate) const NEAR_ZERO: f64 = 0.05;

/// atanh(s) − s for 0 ≤ s < 1.
fn atanh_minus(s: f64, w: f64) -> f64 {
    if s < SERIES_SWITCH {
        let s2 = s * s;
        let mut term = s * s2;
        let mut sum = 0.0f64;
        let mut k = 3.0;
        while term > 1e-18 * sum.max(f64::MIN_POSITIVE) {
            sum += term / k;
            term *= s2;
            k += 2.0;
        }
        sum
    } else {
        s.ln_1p() - (-w).ln_1p() - s
    }
}

/// t − atan(t) for t ≥ 0.
fn tan_minus(t: f64) -> f64 {
    if t < SERIES_SWITCH {
        let t2 = t * t;
        let mut term = t * t2;
        let mut sum = 0.0f64;
        let mut k = 3.0;
        let mut sign = 1.0;
        while term > 1e-18 * sum.abs().max(f64::MIN_POSITIVE) {
            sum += sign * term / k;
            term *= t2;
            k += 2.0;
            sign = -sign;
        }
        sum
    } else {
        t - t.atan()
    }
}

/// ζ as a function of w = 1 − x (w < 1).
pub(crate) fn zeta_of_w(w: f64) -> f64 {
    if w > 0.0 {
        let s = (w * (2.0 - w)).sqrt();
        (1.5 * atanh_minus(s, w)).powf(2.0 / 3.0)
    } else if w < 0.0 {
        let t = ((-w) * (2.0 - w)).sqrt();
        -(1.5 * tan_minus(t)).powf(2.0 / 3.0)
    } else {
        0.0
    }
}

pub fn zeta_of_x(x: f64) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(domain(format!("zeta_of_x needs finite x > 0, got {x}")));
    }
    Ok(zeta_of_w(1.0 - x))
}

/// The point x(ζ) together with w = 1 − x to full relative accuracy.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TurningPoint {
    pub zeta: f64,
    pub x: f64,
    pub w: f64,
}

impl TurningPoint {
    pub fn new(zeta: f64) -> Result<Self> {
        let w = w_of_zeta(zeta)?;
        Ok(TurningPoint { zeta, x: 1.0 - w, w })
    }

    /// R = (1 − x²)/ζ, positive and smooth through ζ = 0.
    pub fn r(&self) -> f64 {
        if self.zeta.abs() < 1e-150 {
            R0 + R1 * self.zeta
        } else {
            self.w * (2.0 - self.w) / self.zeta
        }
    }

    /// φ = (4ζ/(1 − x²))^{1/4}.
    pub fn phi(&self) -> f64 {
        (4.0 / self.r()).sqrt().sqrt()
    }

    /// dx/dζ = −xφ²/2.
    pub fn dx_dzeta(&self) -> f64 {
        let p = self.phi();
        -0.5 * self.x * p * p
    }

    /// ψ_n = 2ⁿ/(xⁿφ^{2n−1}).
    pub fn psi(&self, n: u32) -> f64 {
        let p = self.phi();
        let n = n as i32;
        2f64.powi(n) / (self.x.powi(n) * p.powi(2 * n - 1))
    }
}

/// Cubic Maclaurin seed 1 − 2^{−1/3}ζ + (3/10)2^{−2/3}ζ² + ζ³/700, as w.
pub fn x_series(zeta: f64) -> f64 {
    1.0 - zeta / CBRT2 + 0.3 * zeta * zeta / (CBRT2 * CBRT2) + zeta * zeta * zeta / 700.0
}

fn w_of_zeta(zeta: f64) -> Result<f64> {
    if !zeta.is_finite() {
        return Err(domain(format!("zeta={zeta} is not finite")));
    }
    if zeta == 0.0 {
        return Ok(0.0);
    }
    let mut w = (1.0 - x_series(zeta)).min(0.999);
    let mut last = f64::INFINITY;
    for _ in 0..MAX_NEWTON {
        let x = 1.0 - w;
        let z = zeta_of_w(w);
        let g = z - zeta;
        last = g.abs();
        if last <= 4.0 * f64::EPSILON * zeta.abs() {
            return Ok(w);
        }
        // dζ/dw = √R/x with R = (1 − x²)/ζ
        let r = if z.abs() < 1e-150 { R0 } else { w * (2.0 - w) / z };
        let step = g * x / r.sqrt();
        let mut next = w - step;
        if next >= 1.0 {
            next = 0.5 * (w + 1.0);
        }
        let done = (next - w).abs() <= 2.0 * f64::EPSILON * next.abs();
        w = next;
        if done {
            return Ok(w);
        }
    }
    // rounding in ζ(w) can leave a cycle a few ulps wide
    if last <= 1e-14 * zeta.abs() {
        return Ok(w);
    }
    Err(Error::Convergence(format!("x_of_zeta did not converge for zeta={zeta}")))
}

pub fn x_of_zeta(zeta: f64) -> Result<f64> {
    Ok(TurningPoint::new(zeta)?.x)
}

pub fn phi(zeta: f64) -> Result<f64> {
    Ok(TurningPoint::new(zeta)?.phi())
}

pub fn psi_n(n: u32, zeta: f64) -> Result<f64> {
    Ok(TurningPoint::new(zeta)?.psi(n))
}

/// χ_n(ζ) = ψ′_{n−1}/ψ_{n−1} = (n−1)φ²/2 + (2n−3)R′/(4R), n ≥ 1.
pub fn chi(n: u32, zeta: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::Index("chi_n needs n >= 1".into()));
    }
    let [v] = near_turning(zeta, |z| {
        let tp = TurningPoint::new(z)?;
        let r = tp.r();
        let p2 = tp.phi().powi(2);
        let dr = (tp.x * tp.x * p2 - r) / z;
        let m = (n - 1) as f64;
        Ok([0.5 * m * p2 + (2.0 * m - 1.0) * dr / (4.0 * r)])
    })?;
    Ok(v)
}

/// First two Maclaurin coefficients of χ_n (n ≥ 1).
///
/// With m = n − 1, log ψ_m = const − m·log x + (1 − 2m)·log φ, so
/// χ_n = −m·x′/x + (2m − 1)R′/(4R).  Expanding x(ζ) and R(ζ) at 0 gives
///   χ_{0} = (2m−1)R₁/(4R₀) + m·2^{−1/3},
///   χ_{1} = ((2m−1)/2)(R₂/R₀ − R₁²/(2R₀²)) + (2/5)m·2^{−2/3}.
pub fn chi_series_coeffs(n: u32) -> Result<(f64, f64)> {
    if n < 1 {
        return Err(Error::Index("chi_series_coeffs needs n >= 1".into()));
    }
    let m = (n - 1) as f64;
    let c0 = (2.0 * m - 1.0) * R1 / (4.0 * R0) + m / CBRT2;
    let c1 = (m - 0.5) * (R2 / R0 - R1 * R1 / (2.0 * R0 * R0)) + 0.4 * m / (CBRT2 * CBRT2);
    Ok((c0, c1))
}

/// Evaluates `f` directly for |ζ| ≥ NEAR_ZERO and by degree-7 Lagrange
/// interpolation from ±NEAR_ZERO·{1,…,4} inside, where the direct forms
/// cancel catastrophically.
pub(crate) fn near_turning<const M: usize>(
    zeta: f64,
    f: impl Fn(f64) -> Result<[f64; M]>,
) -> Result<[f64; M]> {
    if zeta.abs() >= NEAR_ZERO {
        return f(zeta);
    }
    const NODES: [f64; 8] = [-4.0, -3.0, -2.0, -1.0, 1.0, 2.0, 3.0, 4.0];
    let t = zeta / NEAR_ZERO;
    let mut out = [0.0; M];
    for (i, &ti) in NODES.iter().enumerate() {
        let mut l = 1.0;
        for (j, &tj) in NODES.iter().enumerate() {
            if i != j {
                l *= (t - tj) / (ti - tj);
            }
        }
        let v = f(ti * NEAR_ZERO)?;
        for (o, vi) in out.iter_mut().zip(v) {
            *o += l * vi;
        }
    }
    Ok(out)
}

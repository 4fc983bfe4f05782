//! Bessel functions of the first kind and their derivatives.
//!
//! J_ν comes from one of three routes:
//! * the ascending series where cancellation is mild (x²/8 ≤ ν+1 or x ≤ 2);
//! * Hankel's expansion at orders in [0, 1) followed by the three-term
//!   recurrence, for x ≥ 30 and |ν| ≤ x;
//! * Steed's method (CF1 + CF2, Temme's series for x < 2) elsewhere.  It also
//!   yields Y_ν, used for non-integer negative orders and for Airy functions.

use super::gamma::{rgamma1p, temme_gammas};
use crate::error::{domain, Error, Result};
use std::f64::consts::PI;

/// Largest derivative order accepted by [`bessel_j_deriv`].
pub const DERIV_CAP: u32 = 12;

const EPS: f64 = 1e-16;
const FPMIN: f64 = 1e-30;
const MAXIT: usize = 200_000;
const RESCALE: f64 = 1e250;

/// A point (ν, x) at which J_ν is evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    pub nu: f64,
    pub x: f64,
}

impl EvalPoint {
    pub fn new(nu: f64, x: f64) -> Result<Self> {
        if !nu.is_finite() {
            return Err(domain(format!("order must be finite, got {nu}")));
        }
        if !(x.is_finite() && x > 0.0) {
            return Err(domain(format!("argument must be finite and positive, got {x}")));
        }
        Ok(EvalPoint { nu, x })
    }
}

/// J_ν(x) for finite ν and x > 0.
///
/// Negative integer orders use J_{−m} = (−1)^m J_m; other negative orders
/// use J_{−μ} = cos(μπ)J_μ − sin(μπ)Y_μ.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    let p = EvalPoint::new(nu, x)?;
    Ok(j_real(p.nu, p.x))
}

/// n-th derivative of J_ν at x via
/// J_ν^(n)(x) = 2^(−n) Σ_m (−1)^m C(n,m) J_{ν−n+2m}(x).
///
/// For n = 0 this is exactly [`bessel_j`].
pub fn bessel_j_deriv(n: u32, nu: f64, x: f64) -> Result<f64> {
    if n > DERIV_CAP {
        return Err(Error::CapExceeded { n, cap: DERIV_CAP });
    }
    let p = EvalPoint::new(nu, x)?;
    Ok(j_deriv_unchecked(n, p.nu, p.x))
}

pub(crate) fn j_deriv_unchecked(n: u32, nu: f64, x: f64) -> f64 {
    if n == 0 {
        return j_real(nu, x);
    }
    let mut sum = 0.0;
    let mut binom = 1.0;
    for m in 0..=n {
        let term = binom * j_real(nu - n as f64 + 2.0 * m as f64, x);
        sum += if m % 2 == 0 { term } else { -term };
        binom = binom * (n - m) as f64 / (m + 1) as f64;
    }
    sum * 0.5f64.powi(n as i32)
}

/// J_ν(x) for any real ν, x > 0 (no validation).
pub(crate) fn j_real(nu: f64, x: f64) -> f64 {
    if x >= HANKEL_MIN_X && nu.abs() <= x {
        return j_hankel_recur(nu, x);
    }
    if nu >= 0.0 {
        return j_nonneg(nu, x);
    }
    let mu = -nu;
    if mu == mu.round() {
        let v = j_nonneg(mu, x);
        return if (mu as u64) % 2 == 0 { v } else { -v };
    }
    let (j, y) = jy(mu, x);
    let (s, c) = sincospi(mu);
    c * j - s * y
}

fn j_nonneg(nu: f64, x: f64) -> f64 {
    // the series loses about exp(x²/(2(ν+1))) to cancellation: ≤ e⁴ here
    if x <= 2.0 || x * x <= 8.0 * (nu + 1.0) {
        j_series(nu, x)
    } else {
        jy(nu, x).0
    }
}

const HANKEL_MIN_X: f64 = 30.0;

/// Large-x route: Hankel's expansion at orders μ, μ+1 (0 ≤ μ < 1), then the
/// three-term recurrence up (or down) to ν.  While |order| < x the
/// recurrence is neutrally stable in both directions; Steed's CF1, by
/// contrast, loses accuracy roughly in proportion to x here.
fn j_hankel_recur(nu: f64, x: f64) -> f64 {
    let m = nu.floor();
    let mu = nu - m;
    let mut lo = hankel(mu, x).0;
    if m == 0.0 {
        return lo;
    }
    let mut hi = hankel(mu + 1.0, x).0;
    if m > 0.0 {
        // (lo, hi) = (J_{k−1}, J_k)
        let mut k = mu + 1.0;
        while k < nu - 0.5 {
            let next = 2.0 * k / x * hi - lo;
            lo = hi;
            hi = next;
            k += 1.0;
        }
        hi
    } else {
        // downward: J_{k−1} = (2k/x) J_k − J_{k+1}, starting at k = μ
        let mut k = mu;
        while k > nu + 0.5 {
            let next = 2.0 * k / x * lo - hi;
            hi = lo;
            lo = next;
            k -= 1.0;
        }
        lo
    }
}

/// Hankel's asymptotic expansion, (J_ν(x), Y_ν(x)), for small orders
/// (|ν| ≤ 2) and x ≥ 30, where the smallest term is below 1e-20.
pub(crate) fn hankel(nu: f64, x: f64) -> (f64, f64) {
    let mu4 = 4.0 * nu * nu;
    let inv8x = 1.0 / (8.0 * x);
    let (mut p, mut q) = (1.0, 0.0);
    let mut term = 1.0;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        term *= (mu4 - odd * odd) * inv8x / k as f64;
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-18 {
            break;
        }
    }
    // χ = x − (ν/2 + 1/4)π, expanded so x itself is never rounded
    let (sx, cx) = x.sin_cos();
    let (sc, cc) = sincospi(0.5 * nu + 0.25);
    let cos_chi = cx * cc + sx * sc;
    let sin_chi = sx * cc - cx * sc;
    let amp = (2.0 / (PI * x)).sqrt();
    (amp * (p * cos_chi - q * sin_chi), amp * (p * sin_chi + q * cos_chi))
}

/// (sin πv, cos πv) with exact values at multiples of 1/2.
pub(crate) fn sincospi(v: f64) -> (f64, f64) {
    let r = v.rem_euclid(2.0);
    match r {
        r if r == 0.0 => (0.0, 1.0),
        r if r == 0.5 => (1.0, 0.0),
        r if r == 1.0 => (0.0, -1.0),
        r if r == 1.5 => (-1.0, 0.0),
        _ => ((PI * r).sin(), (PI * r).cos()),
    }
}

/// (x/2)^ν / Γ(ν+1) as a product of O(ν) well-conditioned factors.
fn series_prefactor(nu: f64, x: f64) -> f64 {
    let m = nu.floor();
    let f = nu - m;
    let h = 0.5 * x;
    let mut p = if f == 0.0 { 1.0 } else { h.powf(f) } * rgamma1p(f);
    let mut j = 1.0;
    while j <= m {
        p *= h / (f + j);
        if p == 0.0 {
            break;
        }
        j += 1.0;
    }
    p
}

/// Ascending series Σ (−x²/4)^k / (k! Γ(ν+k+1)) · (x/2)^ν.
fn j_series(nu: f64, x: f64) -> f64 {
    let pre = series_prefactor(nu, x);
    if pre == 0.0 {
        return 0.0;
    }
    let q = -0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        term *= q / (k * (nu + k));
        sum += term;
        if term.abs() < EPS * 0.25 * sum.abs() || k > 500.0 {
            break;
        }
        k += 1.0;
    }
    pre * sum
}

/// (J_ν(x), Y_ν(x)) for ν ≥ 0, x > 0 by Steed's method.
pub(crate) fn jy(nu: f64, x: f64) -> (f64, f64) {
    debug_assert!(nu >= 0.0 && x > 0.0);
    let nl = if x < 2.0 {
        (nu + 0.5) as i64
    } else {
        ((nu - x + 1.5) as i64).max(0)
    };
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1: f_ν = J'_ν/J_ν
    let mut isign = 1.0;
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    for _ in 0..MAXIT {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            break;
        }
    }

    // Downward recurrence to xmu, rescaling to avoid overflow.
    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let mut rjl1 = rjl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
        if rjl.abs() > RESCALE {
            rjl /= RESCALE;
            rjpl /= RESCALE;
            rjl1 /= RESCALE;
        }
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    let (rjmu, mut rymu, mut ry1);
    if x < 2.0 {
        // Temme's series for Y_μ, Y_{μ+1}
        let x2 = 0.5 * x;
        let pimu = PI * xmu;
        let fct = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
        let dd = -x2.ln();
        let e = xmu * dd;
        let fct2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
        let (gam1, gam2, gampl, gammi) = temme_gammas(xmu);
        let mut ff = 2.0 / PI * fct * (gam1 * e.cosh() + gam2 * fct2 * dd);
        let ee = e.exp();
        let mut p = ee / (gampl * PI);
        let mut q = 1.0 / (ee * PI * gammi);
        let pimu2 = 0.5 * pimu;
        let fct3 = if pimu2.abs() < EPS { 1.0 } else { pimu2.sin() / pimu2 };
        let r = PI * pimu2 * fct3 * fct3;
        let mut cc = 1.0;
        let d2 = -x2 * x2;
        let mut sum = ff + r * q;
        let mut sum1 = p;
        for i in 1..MAXIT {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - xmu2);
            cc *= d2 / fi;
            p /= fi - xmu;
            q /= fi + xmu;
            let del = cc * (ff + r * q);
            sum += del;
            let del1 = cc * p - fi * del;
            sum1 += del1;
            if del.abs() < (1.0 + sum.abs()) * EPS {
                break;
            }
        }
        rymu = -sum;
        ry1 = -sum1 * xi2;
        let rymup = xmu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        // CF2: p + iq = (J' + iY')/(J + iY)
        let mut a = 0.25 - xmu2;
        let mut p = -0.5 * xi;
        let mut q = 1.0;
        let br = 2.0 * x;
        let mut bi = 2.0;
        let mut fct = a * xi / (p * p + q * q);
        let mut cr = br + q * fct;
        let mut ci = bi + p * fct;
        let mut den = br * br + bi * bi;
        let mut dr = br / den;
        let mut di = -bi / den;
        let mut dlr = cr * dr - ci * di;
        let mut dli = cr * di + ci * dr;
        let mut temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        for i in 2..MAXIT {
            a += 2.0 * (i - 1) as f64;
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if dr.abs() + di.abs() < FPMIN {
                dr = FPMIN;
            }
            fct = a / (cr * cr + ci * ci);
            cr = br + cr * fct;
            ci = bi - ci * fct;
            if cr.abs() + ci.abs() < FPMIN {
                cr = FPMIN;
            }
            den = dr * dr + di * di;
            dr /= den;
            di /= -den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (dlr - 1.0).abs() + dli.abs() < EPS {
                break;
            }
        }
        let gam = (p - f) / q;
        rjmu = (w / ((p - f) * gam + q)).sqrt().copysign(rjl);
        rymu = rjmu * gam;
        let rymup = rymu * (p + q / gam);
        ry1 = xmu * xi * rymu - rymup;
    }
    let scale = rjmu / rjl;
    let rj = rjl1 * scale;
    for i in 1..=nl {
        let rytemp = (xmu + i as f64) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    (rj, rymu)
}

/// (K_μ(x), K_{μ+1}(x)) for |μ| ≤ 1/2, x > 0 (Temme's method).
pub(crate) fn k_pair(mu: f64, x: f64) -> (f64, f64) {
    debug_assert!(mu.abs() <= 0.5 && x > 0.0);
    let xi = 1.0 / x;
    let xmu2 = mu * mu;
    if x < 2.0 {
        let x2 = 0.5 * x;
        let pimu = PI * mu;
        let fct = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
        let d = -x2.ln();
        let e = mu * d;
        let fct2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
        let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
        let mut ff = fct * (gam1 * e.cosh() + gam2 * fct2 * d);
        let mut sum = ff;
        let ee = e.exp();
        let mut p = 0.5 * ee / gampl;
        let mut q = 0.5 / (ee * gammi);
        let mut c = 1.0;
        let d2 = x2 * x2;
        let mut sum1 = p;
        for i in 1..MAXIT {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - xmu2);
            c *= d2 / fi;
            p /= fi - mu;
            q /= fi + mu;
            let del = c * ff;
            sum += del;
            sum1 += c * (p - fi * ff);
            if del.abs() < sum.abs() * EPS {
                break;
            }
        }
        (sum, sum1 * 2.0 * xi)
    } else {
        let mut b = 2.0 * (1.0 + x);
        let mut d = 1.0 / b;
        let mut h = d;
        let mut delh = d;
        let mut q1 = 0.0;
        let mut q2 = 1.0;
        let a1 = 0.25 - xmu2;
        let mut q = a1;
        let mut c = a1;
        let mut a = -a1;
        let mut s = 1.0 + q * delh;
        for i in 2..MAXIT {
            a -= 2.0 * (i - 1) as f64;
            c = -a * c / i as f64;
            let qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh *= b * d - 1.0;
            h += delh;
            let dels = q * delh;
            s += dels;
            if (dels / s).abs() < EPS {
                break;
            }
        }
        h *= a1;
        let kmu = (PI / (2.0 * x)).sqrt() * (-x).exp() / s;
        let k1 = kmu * (mu + x + 0.5 - h) * xi;
        (kmu, k1)
    }
}

//! Airy functions Ai, Ai′ and their negative zeros.
//!
//! |x| ≤ 1 uses the Maclaurin series; beyond that the Bessel connections
//! Ai(−t) = (√t/2)(J_{1/3}(ζ) − Y_{1/3}(ζ)/√3) and
//! Ai(t) = √(t/3)K_{1/3}(ζ)/π with ζ = (2/3)t^{3/2}.

use super::bessel::{hankel, jy, k_pair};
use crate::error::{domain, Error, Result};
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Ai(0) = 3^(−2/3)/Γ(2/3)
pub const AI0: f64 = 0.355_028_053_887_817_24;
/// −Ai′(0) = 3^(−1/3)/Γ(1/3)
pub const AIP0: f64 = 0.258_819_403_792_806_8;

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Largest index served by [`airy_zero`] and [`airy_prime_zero`].
pub const AIRY_ZERO_CAP: usize = 100;

/// (Ai(x), Ai′(x)) for finite x.
pub(crate) fn ai_pair(x: f64) -> (f64, f64) {
    if x.abs() <= 1.0 {
        maclaurin(x)
    } else if x < 0.0 {
        let t = -x;
        let z = 2.0 / 3.0 * t * t.sqrt();
        let jy_pair = |nu: f64| if z >= 30.0 { hankel(nu, z) } else { jy(nu, z) };
        let (j13, y13) = jy_pair(1.0 / 3.0);
        let (j23, y23) = jy_pair(2.0 / 3.0);
        let ai = 0.5 * t.sqrt() * (j13 - y13 / SQRT3);
        let aip = 0.5 * t * (j23 + y23 / SQRT3);
        (ai, aip)
    } else {
        let z = 2.0 / 3.0 * x * x.sqrt();
        // K_{−1/3} = K_{1/3}
        let (k13, k23) = k_pair(-1.0 / 3.0, z);
        let ai = (x / 3.0).sqrt() * k13 / PI;
        let aip = -x * k23 / (PI * SQRT3);
        (ai, aip)
    }
}

fn maclaurin(x: f64) -> (f64, f64) {
    let x3 = x * x * x;
    // f = Σ t_k, g = Σ s_k and their derivatives, term by term
    let (mut f, mut g, mut fp, mut gp) = (1.0, x, 0.0, 1.0);
    let (mut t, mut s, mut tp, mut sp) = (1.0, x, 0.5 * x * x, 1.0);
    fp += tp;
    for k in 1..60 {
        let k3 = 3.0 * k as f64;
        t *= x3 / ((k3 - 1.0) * k3);
        s *= x3 / (k3 * (k3 + 1.0));
        sp *= x3 / (k3 * (k3 - 2.0));
        f += t;
        g += s;
        gp += sp;
        if k >= 2 {
            tp *= x3 / ((k3 - 3.0) * (k3 - 1.0));
            fp += tp;
        }
        if t.abs() + s.abs() < 1e-18 * (f.abs() + g.abs()) && k >= 2 {
            break;
        }
    }
    (AI0 * f - AIP0 * g, AI0 * fp - AIP0 * gp)
}

/// Ai(x)
pub fn airy_ai(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(domain(format!("Airy argument must be finite, got {x}")));
    }
    Ok(ai_pair(x).0)
}

/// Ai′(x)
pub fn airy_ai_prime(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(domain(format!("Airy argument must be finite, got {x}")));
    }
    Ok(ai_pair(x).1)
}

/// k-th negative zero of Ai, k ≥ 1 (|a_1| < |a_2| < …).
pub fn airy_zero(k: usize) -> Result<f64> {
    check_index(k)?;
    Ok(table().a[k - 1])
}

/// k-th negative zero of Ai′, k ≥ 1.
pub fn airy_prime_zero(k: usize) -> Result<f64> {
    check_index(k)?;
    Ok(table().a_prime[k - 1])
}

fn check_index(k: usize) -> Result<()> {
    if !(1..=AIRY_ZERO_CAP).contains(&k) {
        return Err(Error::Index(format!("Airy zero index must be in 1..={AIRY_ZERO_CAP}, got {k}")));
    }
    Ok(())
}

/// Zeros a_k, a′_k for k = 1..=len, both 1-indexed in the API.
#[derive(Debug, Clone, PartialEq)]
pub struct AiryZeroTable {
    pub a: Vec<f64>,
    pub a_prime: Vec<f64>,
}

impl AiryZeroTable {
    pub fn build(len: usize) -> Self {
        let a = (1..=len).map(newton_ai).collect();
        let a_prime = (1..=len).map(newton_ai_prime).collect();
        AiryZeroTable { a, a_prime }
    }

    /// Strict ordering and a′_{k+1} < a_k < a′_k.
    pub fn is_consistent(&self) -> bool {
        let dec = |v: &[f64]| v.windows(2).all(|w| w[1] < w[0]) && v.iter().all(|&z| z < 0.0);
        let alternating = (0..self.a.len()).all(|i| {
            let upper = self.a[i] < self.a_prime[i];
            let lower = self.a_prime.get(i + 1).map_or(true, |&b| b < self.a[i]);
            upper && lower
        });
        dec(&self.a) && dec(&self.a_prime) && alternating
    }
}

/// Shared table for k ≤ [`AIRY_ZERO_CAP`], built on first use.
pub fn table() -> &'static AiryZeroTable {
    static TABLE: OnceLock<AiryZeroTable> = OnceLock::new();
    TABLE.get_or_init(|| AiryZeroTable::build(AIRY_ZERO_CAP))
}

fn newton_ai(k: usize) -> f64 {
    let t = 3.0 * PI * (4.0 * k as f64 - 1.0) / 8.0;
    let t2 = t.powi(-2);
    let mut x = -t.powf(2.0 / 3.0)
        * (1.0 + t2 * (5.0 / 48.0 + t2 * (-5.0 / 36.0 + t2 * 77125.0 / 82944.0)));
    for _ in 0..50 {
        let (ai, aip) = ai_pair(x);
        let step = ai / aip;
        x -= step;
        if step.abs() <= 1e-15 * x.abs() {
            break;
        }
    }
    x
}

fn newton_ai_prime(k: usize) -> f64 {
    let t = 3.0 * PI * (4.0 * k as f64 - 3.0) / 8.0;
    let t2 = t.powi(-2);
    let mut x = -t.powf(2.0 / 3.0)
        * (1.0 + t2 * (-7.0 / 48.0 + t2 * (35.0 / 288.0 - t2 * 181223.0 / 207360.0)));
    for _ in 0..50 {
        let (_, aip) = ai_pair(x);
        // Ai″ = x Ai
        let step = aip / (x * ai_pair(x).0);
        x -= step;
        if step.abs() <= 1e-15 * x.abs() {
            break;
        }
    }
    x
}

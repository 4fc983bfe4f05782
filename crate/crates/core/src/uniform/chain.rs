//! Coefficient functions of the uniform expansion of higher derivatives.
//!
//! Normalisation used throughout:
//!
//!   J^(n)_ν(νx) ~ (−1)ⁿψ_n(ζ)·[Ai(ν^{2/3}ζ)ν^{−e_A} Σ_s A_{s,n}ν^{−2s}
//!                            + Ai′(ν^{2/3}ζ)ν^{−e_B} Σ_s B_{s,n}ν^{−2s}]
//!
//! with (e_A, e_B) = (1/3, 5/3) for even n and (4/3, 2/3) for odd n, so
//! (A_{s,0}, B_{s,0}) = (A_s, B_s) and (A_{s,1}, B_{s,1}) = (C_s, D_s).
//! Differentiating once more (d/dX = ν^{−1}·dζ/dx·d/dζ, dζ/dx = −ψ_{n+1}/ψ_n,
//! Ai″(t) = t·Ai(t)) gives, with χ = χ_{n+1},
//!
//!   n even: A_{s,n+1} = χA_{s,n} + A′_{s,n} + ζB_{s,n},
//!           B_{s,n+1} = A_{s,n} + χB_{s−1,n} + B′_{s−1,n};
//!   n odd:  A_{s,n+1} = ζB_{s,n} + χA_{s−1,n} + A′_{s−1,n},
//!           B_{s,n+1} = A_{s,n} + χB_{s,n} + B′_{s,n}.
//!
//! [`uniform_coefficient_step`] runs this chain with numerical derivatives;
//! [`reduced_coefficients`] reads the same functions off the exact
//! reduction J^(n) = β_n J′ + γ_n J, with no differentiation at all.

use super::olver::{olver_coefficients, OLVER_TERMS};
use super::reduction::deriv_reduction;
use super::turning::{chi, TurningPoint};
use crate::error::{Error, Result};
use crate::polycoeff::rat_to_f64;

/// Highest chain depth and expansion index served.
pub const CHAIN_CAP: u32 = 6;
pub const S_CAP: u32 = (OLVER_TERMS - 1) as u32;

/// Base ζ-step of the difference stencils.
pub const BASE_STEP: f64 = 1e-3;

/// Step for a chain of depth n: nested stencils amplify rounding, so the
/// deepest chains use a wider step.
pub fn chain_step(n: u32) -> f64 {
    if n >= 5 {
        5.0 * BASE_STEP
    } else {
        BASE_STEP
    }
}

/// A_{s,n} and B_{s,n} for s ≤ 1, n ≤ 6 on demand.
#[derive(Clone, Copy, Debug)]
pub struct CoefficientChain {
    pub s: u32,
    pub n: u32,
    pub step: f64,
}

/// The (A_{s,n}, B_{s,n}) pair as functions of ζ, built by the chain above.
pub fn uniform_coefficient_step(s: u32, n: u32) -> Result<CoefficientChain> {
    if n > CHAIN_CAP {
        return Err(Error::CapExceeded { n, cap: CHAIN_CAP });
    }
    if s > S_CAP {
        return Err(Error::CapExceeded { n: s, cap: S_CAP });
    }
    Ok(CoefficientChain { s, n, step: chain_step(n) })
}

fn deriv5(v: &[f64], i: usize, h: f64) -> f64 {
    (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) / (12.0 * h)
}

impl CoefficientChain {
    /// (A_{s,n}(ζ), B_{s,n}(ζ)).
    pub fn eval(&self, zeta: f64) -> Result<(f64, f64)> {
        let levels = self.all_s(zeta)?;
        Ok(levels[self.s as usize])
    }

    /// (A_{s,n}, B_{s,n}) for every s ≤ 1.
    pub fn all_s(&self, zeta: f64) -> Result<[(f64, f64); OLVER_TERMS]> {
        let n = self.n as usize;
        let h = self.step;
        let half = 2 * n;
        let pts: Vec<f64> = (0..=2 * half).map(|i| zeta + (i as f64 - half as f64) * h).collect();
        // a[s][i], b[s][i] on the current grid
        let mut a = vec![vec![0.0; pts.len()]; OLVER_TERMS];
        let mut b = vec![vec![0.0; pts.len()]; OLVER_TERMS];
        for (i, &z) in pts.iter().enumerate() {
            let o = olver_coefficients(z)?;
            for s in 0..OLVER_TERMS {
                a[s][i] = o.a[s];
                b[s][i] = o.b[s];
            }
        }
        for level in 0..n {
            let lo = 2 * (level + 1);
            let hi = pts.len() - 2 * (level + 1);
            let mut na = vec![vec![0.0; pts.len()]; OLVER_TERMS];
            let mut nb = vec![vec![0.0; pts.len()]; OLVER_TERMS];
            for i in lo..hi {
                let z = pts[i];
                let c = chi(level as u32 + 1, z)?;
                for s in 0..OLVER_TERMS {
                    let (am, bm, dam, dbm) = if s > 0 {
                        (a[s - 1][i], b[s - 1][i], deriv5(&a[s - 1], i, h), deriv5(&b[s - 1], i, h))
                    } else {
                        (0.0, 0.0, 0.0, 0.0)
                    };
                    if level % 2 == 0 {
                        na[s][i] = c * a[s][i] + deriv5(&a[s], i, h) + z * b[s][i];
                        nb[s][i] = a[s][i] + c * bm + dbm;
                    } else {
                        na[s][i] = z * b[s][i] + c * am + dam;
                        nb[s][i] = a[s][i] + c * b[s][i] + deriv5(&b[s], i, h);
                    }
                }
            }
            a = na;
            b = nb;
        }
        let mut out = [(0.0, 0.0); OLVER_TERMS];
        for (s, o) in out.iter_mut().enumerate() {
            *o = (a[s][half], b[s][half]);
        }
        Ok(out)
    }
}

/// Exponents (in thirds) of the Ai and Ai′ parts for derivative order n.
fn exponents(n: u32) -> (u32, u32) {
    if n % 2 == 0 {
        (1, 5)
    } else {
        (4, 2)
    }
}

/// (A_{s,n}(ζ), B_{s,n}(ζ)) for s ≤ 1 read off the reduction: substitute
/// the k ≤ 1 expansions of J and J′ into f_n J′ + g_n J and collect the
/// coefficient of each power of ν.
pub fn reduced_coefficients(n: u32, zeta: f64) -> Result<[(f64, f64); OLVER_TERMS]> {
    let red = deriv_reduction(n)?;
    let tp = TurningPoint::new(zeta)?;
    let o = olver_coefficients(zeta)?;
    let (psi0, psi1, psin) = (tp.psi(0), tp.psi(1), tp.psi(n));
    let (ea, eb) = exponents(n);
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let mut out = [(0.0, 0.0); OLVER_TERMS];
    for (s, slot) in out.iter_mut().enumerate() {
        let ta = ea + 6 * s as u32;
        let tb = eb + 6 * s as u32;
        let (mut ai, mut aip) = (0.0, 0.0);
        for k in 0..OLVER_TERMS {
            let k6 = 6 * k as u32;
            for (xi, q, c) in red.beta.scaled_terms() {
                let v = rat_to_f64(&c) * tp.x.powi(-(xi as i32));
                if 3 * q + 4 + k6 == ta {
                    ai -= psi1 * v * o.c[k];
                }
                if 3 * q + 2 + k6 == tb {
                    aip -= psi1 * v * o.d[k];
                }
            }
            for (xi, q, c) in red.gamma.scaled_terms() {
                let v = rat_to_f64(&c) * tp.x.powi(-(xi as i32));
                if 3 * q + 1 + k6 == ta {
                    ai += psi0 * v * o.a[k];
                }
                if 3 * q + 5 + k6 == tb {
                    aip += psi0 * v * o.b[k];
                }
            }
        }
        *slot = (sign * ai / psin, sign * aip / psin);
    }
    Ok(out)
}

/// (e_A, (−1)ⁿ) for derivative order n.
pub(crate) fn exponents_sign(n: u32) -> (f64, f64) {
    let (ea, _) = exponents(n);
    (ea as f64 / 3.0, if n % 2 == 0 { 1.0 } else { -1.0 })
}

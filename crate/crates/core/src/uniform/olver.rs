//! Coefficient functions of the large-order uniform expansions
//!
//!   J_ν(νx)  ~ φ·[Ai(ν^{2/3}ζ)ν^{−1/3} Σ A_k ν^{−2k} + Ai′(ν^{2/3}ζ)ν^{−5/3} Σ B_k ν^{−2k}]
//!   J′_ν(νx) ~ −(2/(xφ))·[Ai ν^{−4/3} Σ C_k ν^{−2k} + Ai′ ν^{−2/3} Σ D_k ν^{−2k}]
//!
//! with A_k, B_k, C_k, D_k assembled from the Debye polynomials U_k, V_k in
//! p = (1 − x²)^{−1/2} and the Airy-zero coefficients u_j, v_j.  For ζ < 0
//! the branches p = −i(x² − 1)^{−1/2}, ζ^{1/2} = i(−ζ)^{1/2} continue the
//! ζ > 0 forms through the turning point; the sums are then real.

use super::turning::{near_turning, TurningPoint};
use crate::error::Result;
use crate::polycoeff::{rat, NuPoly};
use crate::specfun::ai_pair;
use num_complex::Complex64;
use std::sync::OnceLock;

/// Number of terms k = 0, 1 kept in each sum.
pub const OLVER_TERMS: usize = 2;
const DEBYE_LEN: usize = 2 * OLVER_TERMS;

/// Debye polynomials U_k and V_k, k < 4, exactly.
pub fn debye_polynomials() -> &'static (Vec<NuPoly>, Vec<NuPoly>) {
    static CELL: OnceLock<(Vec<NuPoly>, Vec<NuPoly>)> = OnceLock::new();
    CELL.get_or_init(|| {
        // U_{k+1} = ½p²(1−p²)U_k′ + ⅛∫₀^p (1−5t²)U_k dt
        let p2 = NuPoly::monomial(rat(1, 1), 2);
        let half_p2_1mp2 = (&p2 - &(&p2 * &p2)).scale(&rat(1, 2));
        let one_m5 = &NuPoly::one() - &p2.scale(&rat(5, 1));
        let mut u = vec![NuPoly::one()];
        for k in 0..DEBYE_LEN - 1 {
            let a = &half_p2_1mp2 * &u[k].derivative();
            let b = (&one_m5 * &u[k]).integral().scale(&rat(1, 8));
            u.push(&a + &b);
        }
        // V_k = U_k + p(p²−1)(½U_{k−1} + pU′_{k−1})
        let p = NuPoly::monomial(rat(1, 1), 1);
        let p_p2m1 = &p * &(&p2 - &NuPoly::one());
        let mut v = vec![NuPoly::one()];
        for k in 1..DEBYE_LEN {
            let inner = &u[k - 1].scale(&rat(1, 2)) + &(&p * &u[k - 1].derivative());
            v.push(&u[k] + &(&p_p2m1 * &inner));
        }
        (u, v)
    })
}

/// u_j, v_j for j < 4: u_0 = v_0 = 1,
/// u_j = (6j−5)(6j−3)(6j−1)/((2j−1)·216j)·u_{j−1}, v_j = −(6j+1)/(6j−1)·u_j.
fn airy_coefficients() -> ([f64; DEBYE_LEN], [f64; DEBYE_LEN]) {
    let mut u = [1.0; DEBYE_LEN];
    let mut v = [1.0; DEBYE_LEN];
    for j in 1..DEBYE_LEN {
        let jf = j as f64;
        u[j] = u[j - 1] * (6.0 * jf - 5.0) * (6.0 * jf - 3.0) * (6.0 * jf - 1.0) / ((2.0 * jf - 1.0) * 216.0 * jf);
        v[j] = -(6.0 * jf + 1.0) / (6.0 * jf - 1.0) * u[j];
    }
    (u, v)
}

fn horner(c: &[f64], p: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * p + a)
}

/// A_k, B_k, C_k, D_k at one ζ, for k = 0, 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OlverCoeffs {
    pub a: [f64; OLVER_TERMS],
    pub b: [f64; OLVER_TERMS],
    pub c: [f64; OLVER_TERMS],
    pub d: [f64; OLVER_TERMS],
}

fn direct(zeta: f64) -> Result<[f64; 8]> {
    static FLOAT: OnceLock<(Vec<Vec<f64>>, Vec<Vec<f64>>)> = OnceLock::new();
    let (uf, vf) = FLOAT.get_or_init(|| {
        let (u, v) = debye_polynomials();
        (u.iter().map(NuPoly::to_f64_coeffs).collect(), v.iter().map(NuPoly::to_f64_coeffs).collect())
    });
    let tp = TurningPoint::new(zeta)?;
    let one_m_x2 = tp.w * (2.0 - tp.w);
    let (p, sz) = if zeta > 0.0 {
        (Complex64::new(1.0 / one_m_x2.sqrt(), 0.0), Complex64::new(zeta.sqrt(), 0.0))
    } else {
        (Complex64::new(0.0, -1.0 / (-one_m_x2).sqrt()), Complex64::new(0.0, (-zeta).sqrt()))
    };
    let (uc, vc) = airy_coefficients();
    let inv3 = (sz * sz * sz).inv();
    let upoly: Vec<Complex64> = uf.iter().map(|c| horner(c, p)).collect();
    let vpoly: Vec<Complex64> = vf.iter().map(|c| horner(c, p)).collect();
    let mut out = [0.0; 8];
    for k in 0..OLVER_TERMS {
        let (mut a, mut b, mut c, mut d) = (Complex64::default(), Complex64::default(), Complex64::default(), Complex64::default());
        let mut pw = Complex64::new(1.0, 0.0);
        for j in 0..=2 * k + 1 {
            let f = 1.5f64.powi(j as i32);
            if j <= 2 * k {
                a += pw * f * vc[j] * upoly[2 * k - j];
                d += pw * f * uc[j] * vpoly[2 * k - j];
            }
            b += pw * f * uc[j] * upoly[2 * k + 1 - j];
            c += pw * f * vc[j] * vpoly[2 * k + 1 - j];
            pw *= inv3;
        }
        b = -b / sz;
        c = -c * sz;
        out[k] = a.re;
        out[2 + k] = b.re;
        out[4 + k] = c.re;
        out[6 + k] = d.re;
    }
    Ok(out)
}

/// Coefficient functions at ζ; interpolated across a small window around
/// the turning point, where the individual terms blow up like ζ^{−5}.
pub fn olver_coefficients(zeta: f64) -> Result<OlverCoeffs> {
    let v = near_turning(zeta, direct)?;
    Ok(OlverCoeffs { a: [v[0], v[1]], b: [v[2], v[3]], c: [v[4], v[5]], d: [v[6], v[7]] })
}

/// (J_ν(νx), J′_ν(νx)) from the expansions above with k ≤ 1, at x = x(ζ).
pub fn j_uniform(nu: f64, zeta: f64) -> Result<(f64, f64)> {
    let tp = TurningPoint::new(zeta)?;
    let o = olver_coefficients(zeta)?;
    let phi = tp.phi();
    let n13 = nu.cbrt();
    let (ai, aip) = ai_pair(n13 * n13 * zeta);
    let inv2 = 1.0 / (nu * nu);
    let j = phi * (ai / n13 * (o.a[0] + o.a[1] * inv2) + aip / (nu * n13 * n13) * (o.b[0] + o.b[1] * inv2));
    let jp = -2.0 / (tp.x * phi) * (ai / (nu * n13) * (o.c[0] + o.c[1] * inv2) + aip / (n13 * n13) * (o.d[0] + o.d[1] * inv2));
    Ok((j, jp))
}

//! Large-order zero estimates in the turning-point frame.
//!
//! Near x = ν the zeros of J^(n)_ν(νx) sit at ζ ≈ ν^{−2/3}z with z a zero
//! of an Airy-type function.  The family used here follows the parity rule
//! (a_k for even n, a′_k for odd n); [`airy_family_cross_check`] measures
//! it against the opposite family and against the zeros of Ai^(n), the
//! leading-order limit of J^(n) at the turning point.

use super::chain::exponents_sign;
use super::olver::j_uniform;
use super::reduction::{deriv_reduction, REDUCTION_CAP};
use super::turning::{x_of_zeta, TurningPoint};
use crate::error::{Error, Result};
use crate::oracle::{kth_zero, refine};
use crate::specfun::{ai_pair, airy_prime_zero, airy_zero};
use crate::zero::{Method, ZeroEstimate, ZeroQuery};
use serde::Serialize;
use std::fmt;

/// Smallest ν of the documented regime.
pub const NU_MIN: f64 = 20.0;
/// Order used for the startup family check.
pub const FAMILY_CHECK_NU: f64 = 200.0;

const CBRT2: f64 = 1.259_921_049_894_873_2;
const MAX_TAYLOR: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AiryFamily {
    /// zeros a_k of Ai
    Ai,
    /// zeros a′_k of Ai′
    AiPrime,
}

impl AiryFamily {
    /// a_k for even n, a′_k for odd n.
    pub fn for_order(n: u32) -> Self {
        if n % 2 == 0 {
            AiryFamily::Ai
        } else {
            AiryFamily::AiPrime
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            AiryFamily::Ai => AiryFamily::AiPrime,
            AiryFamily::AiPrime => AiryFamily::Ai,
        }
    }

    pub fn zero(self, k: u32) -> Result<f64> {
        match self {
            AiryFamily::Ai => airy_zero(k as usize),
            AiryFamily::AiPrime => airy_prime_zero(k as usize),
        }
    }
}

impl fmt::Display for AiryFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AiryFamily::Ai => "a_k",
            AiryFamily::AiPrime => "a'_k",
        })
    }
}

/// Position among the positive zeros of the zero tracked by a large-order
/// estimate with index argument k: J^(n) has ⌊n/2⌋ zeros in front of the
/// Airy-labelled ones.
pub fn large_nu_target_index(n: u32, k: u32) -> u32 {
    k + n / 2
}

fn check_regime(q: &ZeroQuery, order: u8) -> Result<()> {
    if !(1..=3).contains(&order) {
        return Err(Error::Config(format!("large-nu order {order} must be 1, 2 or 3")));
    }
    if q.n < 2 {
        return Err(Error::Regime(format!("large-nu estimates need derivative order n >= 2, got {}", q.n)));
    }
    if q.n > REDUCTION_CAP {
        return Err(Error::CapExceeded { n: q.n, cap: REDUCTION_CAP });
    }
    if !(q.nu >= NU_MIN) {
        return Err(Error::Regime(format!("large-nu estimates need nu >= {NU_MIN}, got {}", q.nu)));
    }
    Ok(())
}

/// Large-order estimate of order 1, 2 or 3 with the parity-selected family:
///
/// 1. ν·x(ν^{−2/3}z);
/// 2. ν − 2^{−1/3}z·ν^{1/3};
/// 3. ν·x(ζ*) with ζ* the zero of the s ≤ 1 uniform approximant of
///    J^(n)_ν(νx(ζ)), found by a second-order Taylor iteration.  The seed
///    is ν^{−2/3} times the zero of Ai^(n) at the target position (the
///    approximant's leading-order limit), which for n ≤ 2 is the
///    parity-selected zero itself; the family argument does not affect
///    this order.
///
/// No rigorous bound is attached.
pub fn large_nu_zero(q: &ZeroQuery, order: u8) -> Result<ZeroEstimate> {
    large_nu_zero_with(q, order, AiryFamily::for_order(q.n))
}

/// As [`large_nu_zero`] with an explicit Airy-zero family.
pub fn large_nu_zero_with(q: &ZeroQuery, order: u8, family: AiryFamily) -> Result<ZeroEstimate> {
    let q = ZeroQuery::new(q.n, q.nu, q.k)?;
    check_regime(&q, order)?;
    let nu = q.nu;
    let n13 = nu.cbrt();
    let target = large_nu_target_index(q.n, q.k);
    let value = match order {
        1 => nu * x_of_zeta(family.zero(q.k)? / (n13 * n13))?,
        2 => nu - family.zero(q.k)? / CBRT2 * n13,
        _ => {
            let seed = airy_derivative_zero(q.n, target)? / (n13 * n13);
            nu * x_of_zeta(approximant_zero(q.n, nu, seed)?)?
        }
    };
    Ok(ZeroEstimate {
        query: q,
        target_index: target,
        value,
        method: Method::LargeNu(order),
        bound: None,
        applicable: false,
    })
}

/// s ≤ 1 uniform approximant of J^(n)_ν(νx(ζ)), divided by ψ_n(ζ) and
/// scaled to O(1).
pub fn uniform_approximant(n: u32, nu: f64, zeta: f64) -> Result<f64> {
    let red = deriv_reduction(n)?;
    let tp = TurningPoint::new(zeta)?;
    let (j, jp) = j_uniform(nu, zeta)?;
    let (ea, sign) = exponents_sign(n);
    Ok(sign * red.apply_scaled(tp.x, nu, j, jp) * nu.powf(ea) / tp.psi(n))
}

/// ζ ← ζ + κ₁ + κ₂ with κ₁ = −W/W′, κ₂ = −W″κ₁²/(2W′); derivatives by
/// 5-point stencils with a step proportional to ν^{−2/3}, the scale on
/// which W oscillates.
fn approximant_zero(n: u32, nu: f64, zeta0: f64) -> Result<f64> {
    let scale = nu.powf(-2.0 / 3.0);
    let h = 0.02 * scale;
    let w = |z: f64| uniform_approximant(n, nu, z);
    let mut zeta = zeta0;
    for _ in 0..MAX_TAYLOR {
        let f: Vec<f64> = (-2..=2).map(|i| w(zeta + i as f64 * h)).collect::<Result<_>>()?;
        let d1 = (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) / (12.0 * h);
        let d2 = (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12.0 * h * h);
        if d1 == 0.0 || !d1.is_finite() {
            break;
        }
        let k1 = -f[2] / d1;
        let k2 = -d2 * k1 * k1 / (2.0 * d1);
        let step = (k1 + k2).clamp(-scale, scale);
        zeta += step;
        // W carries a few ulps of evaluation noise, so iterates can cycle
        // between neighbouring floats; stop once the step is at that level.
        if step.abs() <= 64.0 * f64::EPSILON * zeta.abs().max(scale) {
            return Ok(zeta);
        }
    }
    Err(Error::Convergence(format!("uniform approximant zero for n={n}, nu={nu} from zeta={zeta0}")))
}

/// Ai^(n) = P_n(t)Ai(t) + Q_n(t)Ai′(t); returns (P_n, Q_n) coefficients.
fn airy_derivative_polys(n: u32) -> (Vec<f64>, Vec<f64>) {
    let deriv = |p: &[f64]| -> Vec<f64> { p.iter().enumerate().skip(1).map(|(i, c)| i as f64 * c).collect() };
    let add = |a: &[f64], b: &[f64]| -> Vec<f64> {
        (0..a.len().max(b.len())).map(|i| a.get(i).unwrap_or(&0.0) + b.get(i).unwrap_or(&0.0)).collect()
    };
    let (mut p, mut q) = (vec![1.0], vec![0.0]);
    for _ in 0..n {
        let mut tq = vec![0.0];
        tq.extend(&q);
        let np = add(&deriv(&p), &tq);
        let nq = add(&p, &deriv(&q));
        p = np;
        q = nq;
    }
    (p, q)
}

/// The `index`-th largest real zero of Ai^(n) (Ai″ = t·Ai, so for n ≥ 2
/// the list starts with zeros at t ≥ 0).
pub fn airy_derivative_zero(n: u32, index: u32) -> Result<f64> {
    if index < 1 {
        return Err(Error::Index("Airy derivative zero index must be >= 1".into()));
    }
    let (p, q) = airy_derivative_polys(n);
    let ev = |c: &[f64], t: f64| c.iter().rev().fold(0.0, |a, &x| a * t + x);
    let f = |t: f64| {
        let (ai, aip) = ai_pair(t);
        ev(&p, t) * ai + ev(&q, t) * aip
    };
    let h = 0.01;
    let mut t = 8.0;
    let mut ft = f(t);
    let mut found = 0;
    while t > -200.0 {
        let s = t - h;
        let fs = f(s);
        if fs == 0.0 || (fs < 0.0) != (ft < 0.0) {
            found += 1;
            if found == index {
                return Ok(if fs == 0.0 { s } else { refine(f, s, t) });
            }
        }
        t = s;
        ft = fs;
    }
    Err(Error::NotFound(format!("zero {index} of the order-{n} Airy derivative")))
}

/// One row of the family comparison: residuals of the order-2 estimate
/// against the oracle zero at the target index.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilyCheck {
    pub n: u32,
    pub nu: f64,
    pub k: u32,
    pub target_index: u32,
    pub oracle: f64,
    pub selected: AiryFamily,
    pub selected_residual: f64,
    pub opposite_residual: f64,
    /// Residual when z is the matching zero of Ai^(n).
    pub airy_derivative_residual: f64,
}

impl FamilyCheck {
    /// opposite / selected residual; > 1 means the selection wins.
    pub fn ratio(&self) -> f64 {
        self.opposite_residual / self.selected_residual
    }

    pub fn selected_wins(&self) -> bool {
        self.selected_residual < self.opposite_residual
    }
}

impl fmt::Display for FamilyCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} nu={} k={}: {} residual {:.3e}, {} residual {:.3e} (ratio {:.2}), Ai^({}) zero residual {:.3e}",
            self.n,
            self.nu,
            self.k,
            self.selected,
            self.selected_residual,
            self.selected.opposite(),
            self.opposite_residual,
            self.ratio(),
            self.n,
            self.airy_derivative_residual
        )
    }
}

/// Compares both families (and the Ai^(n) zeros) against the oracle at
/// order ν for the k-th estimate.
pub fn airy_family_cross_check(n: u32, nu: f64, k: u32) -> Result<FamilyCheck> {
    let q = ZeroQuery::new(n, nu, k)?;
    let sel = AiryFamily::for_order(n);
    let est = large_nu_zero_with(&q, 2, sel)?;
    let opp = large_nu_zero_with(&q, 2, sel.opposite())?;
    let target = est.target_index;
    let oracle = kth_zero(&ZeroQuery::new(n, nu, target)?)?;
    let z = airy_derivative_zero(n, target)?;
    let ad = nu - z / CBRT2 * nu.cbrt();
    Ok(FamilyCheck {
        n,
        nu,
        k,
        target_index: target,
        oracle,
        selected: sel,
        selected_residual: (est.value - oracle).abs(),
        opposite_residual: (opp.value - oracle).abs(),
        airy_derivative_residual: (ad - oracle).abs(),
    })
}

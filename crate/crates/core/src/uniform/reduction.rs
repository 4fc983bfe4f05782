//! Reduction of J^(n)_ν to J_ν and J′_ν: J^(n) = β_n J′ + γ_n J.
//!
//! From J″ = −J′/x + (ν²/x² − 1)J,
//!   β_{n+1} = β_n′ − β_n/x + γ_n,   γ_{n+1} = γ_n′ + (ν²/x² − 1)β_n,
//! starting at β_1 = 1, γ_1 = 0 (so β_2 = −1/x, γ_2 = ν²/x² − 1).  The
//! coefficients are polynomials in u = 1/x and ν, kept exactly.

use crate::error::{Error, Result};
use crate::polycoeff::{rat, rat_to_f64, Rational};
use crate::specfun::{bessel_j, bessel_j_deriv};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// Largest derivative order served by [`deriv_reduction`].
pub const REDUCTION_CAP: u32 = 8;

/// Σ c·u^i·ν^j with u = 1/x; keys are (i, j).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bivar {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl Bivar {
    fn constant(c: Rational) -> Self {
        let mut b = Bivar::default();
        b.push(0, 0, c);
        b
    }

    fn push(&mut self, i: u32, j: u32, c: Rational) {
        let e = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    fn add(&self, o: &Bivar) -> Bivar {
        let mut out = self.clone();
        for (&(i, j), c) in &o.terms {
            out.push(i, j, c.clone());
        }
        out
    }

    /// d/dx, using du/dx = −u².
    fn dx(&self) -> Bivar {
        let mut out = Bivar::default();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                out.push(i + 1, j, -c * Rational::from_integer(i.into()));
            }
        }
        out
    }

    /// Multiply by c·u^di·ν^dj.
    fn times(&self, di: u32, dj: u32, c: &Rational) -> Bivar {
        let mut out = Bivar::default();
        for (&(i, j), a) in &self.terms {
            out.push(i + di, j + dj, a * c);
        }
        out
    }

    /// (u-power, ν-power, coefficient) triples.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at (x, ν).
    pub fn eval(&self, x: f64, nu: f64) -> f64 {
        let u = 1.0 / x;
        self.terms().map(|(i, j, c)| rat_to_f64(c) * u.powi(i as i32) * nu.powi(j as i32)).sum()
    }

    /// Value at argument νx: each term becomes c·ν^{−(i−j)}·x^{−i}.
    pub fn eval_scaled(&self, x: f64, nu: f64) -> f64 {
        let (u, r) = (1.0 / x, 1.0 / nu);
        self.terms().map(|(i, j, c)| rat_to_f64(c) * u.powi(i as i32) * r.powi((i - j) as i32)).sum()
    }

    /// The scaled form as (power of 1/x, power of 1/ν, coefficient).
    pub fn scaled_terms(&self) -> Vec<(u32, u32, Rational)> {
        self.terms().map(|(i, j, c)| (i, i - j, c.clone())).collect()
    }
}

impl std::fmt::Display for Bivar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(i, j, c)| {
                let mut s = format!("({c})");
                if j > 0 {
                    s += &format!("*nu^{j}");
                }
                if i > 0 {
                    s += &format!("/x^{i}");
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// β_n and γ_n for one derivative order.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivReduction {
    pub n: u32,
    pub beta: Bivar,
    pub gamma: Bivar,
}

impl DerivReduction {
    /// β_n(x, ν)J′_ν(x) + γ_n(x, ν)J_ν(x) given J and J′ at x.
    pub fn apply(&self, x: f64, nu: f64, j: f64, jp: f64) -> f64 {
        self.beta.eval(x, nu) * jp + self.gamma.eval(x, nu) * j
    }

    /// The same identity at argument νx: f_n(x)J′_ν(νx) + g_n(x)J_ν(νx)
    /// with f_n, g_n polynomials in 1/x and 1/ν.
    pub fn apply_scaled(&self, x: f64, nu: f64, j: f64, jp: f64) -> f64 {
        self.beta.eval_scaled(x, nu) * jp + self.gamma.eval_scaled(x, nu) * j
    }
}

fn all_reductions() -> &'static [DerivReduction] {
    static CELL: OnceLock<Vec<DerivReduction>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = vec![
            DerivReduction { n: 0, beta: Bivar::default(), gamma: Bivar::constant(rat(1, 1)) },
            DerivReduction { n: 1, beta: Bivar::constant(rat(1, 1)), gamma: Bivar::default() },
        ];
        for n in 1..REDUCTION_CAP {
            let prev = &out[n as usize];
            let beta = prev.beta.dx().add(&prev.beta.times(1, 0, &rat(-1, 1))).add(&prev.gamma);
            let gamma = prev
                .gamma
                .dx()
                .add(&prev.beta.times(2, 2, &rat(1, 1)))
                .add(&prev.beta.times(0, 0, &rat(-1, 1)));
            out.push(DerivReduction { n: n + 1, beta, gamma });
        }
        out
    })
}

/// Sample points for the construction-time identity check.
const CHECK_POINTS: [(f64, f64); 3] = [(7.3, 2.2), (15.0, 9.5), (31.0, 20.0)];

/// The reduction for order n (0 ≤ n ≤ 8), checked against direct
/// derivatives at a few points.
pub fn deriv_reduction(n: u32) -> Result<&'static DerivReduction> {
    if n > REDUCTION_CAP {
        return Err(Error::CapExceeded { n, cap: REDUCTION_CAP });
    }
    static CHECKED: OnceLock<std::result::Result<(), String>> = OnceLock::new();
    let all = all_reductions();
    CHECKED
        .get_or_init(|| {
            for r in all {
                for &(x, nu) in &CHECK_POINTS {
                    let j = bessel_j(nu, x).map_err(|e| e.to_string())?;
                    let jp = bessel_j_deriv(1, nu, x).map_err(|e| e.to_string())?;
                    let want = bessel_j_deriv(r.n, nu, x).map_err(|e| e.to_string())?;
                    let got = r.apply(x, nu, j, jp);
                    let scale = j.abs().max(jp.abs()).max(want.abs());
                    if (got - want).abs() > 1e-9 * scale {
                        return Err(format!("reduction of order {} disagrees at x={x}, nu={nu}", r.n));
                    }
                }
            }
            Ok(())
        })
        .clone()
        .map_err(Error::Verification)?;
    Ok(&all[n as usize])
}

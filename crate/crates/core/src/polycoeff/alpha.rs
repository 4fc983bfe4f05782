//! α_{j,d}(ν): coefficient of x^(−j) in the large-x amplitude series
//!
//!   √(πx/2)·J_ν^(d)(x) ~ Σ_j α_{j,d}(ν) x^(−j) · T_{j+d}(ω),  ω = x − νπ/2 − π/4,
//!
//! where T is cos when j+d is even and sin when j+d is odd.

use super::nupoly::{rat, NuPoly};
use super::oracle::alpha_oracle;
use crate::error::{Error, Result};
use serde::Serialize;
use std::sync::OnceLock;

pub const M_CAP: usize = 16;
pub const N_CAP: usize = 12;

/// A_s(ν) = Π_{j=1}^{s} (4ν² − (2j−1)²) / (s!·8^s)
pub fn a_s_polynomial(s: usize) -> NuPoly {
    let mut p = NuPoly::one();
    for j in 1..=s {
        let odd = (2 * j - 1) as i64;
        let factor = NuPoly::from_coeffs(vec![rat(-odd * odd, 1), rat(0, 1), rat(4, 1)]);
        p = &p * &factor;
        p = p.scale(&rat(1, 8 * j as i64));
    }
    p
}

/// Row d = 0: α_{2m,0} = (−1)^m A_{2m}, α_{2m+1,0} = (−1)^{m+1} A_{2m+1}.
pub(crate) fn base_row(m_max: usize) -> Vec<NuPoly> {
    (0..=m_max)
        .map(|j| {
            let a = a_s_polynomial(j);
            let m = j / 2;
            let negative = if j % 2 == 0 { m % 2 == 1 } else { m % 2 == 0 };
            if negative {
                -&a
            } else {
                a
            }
        })
        .collect()
}

/// Table of α_{m,n}(ν) for 0 ≤ m ≤ m_max, 0 ≤ n ≤ n_max.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaTable {
    pub m_max: usize,
    pub n_max: usize,
    /// `rows[n][m]`
    rows: Vec<Vec<NuPoly>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlphaEntry {
    pub m: usize,
    pub n: usize,
    pub coeffs: Vec<String>,
}

impl AlphaTable {
    pub(crate) fn from_rows(m_max: usize, n_max: usize, rows: Vec<Vec<NuPoly>>) -> Self {
        debug_assert_eq!(rows.len(), n_max + 1);
        AlphaTable { m_max, n_max, rows }
    }

    /// α_{m,n}; negative m is the empty-sum zero.
    pub fn get(&self, m: i64, n: usize) -> Result<NuPoly> {
        if m < 0 {
            return Ok(NuPoly::zero());
        }
        let m = m as usize;
        if m > self.m_max || n > self.n_max {
            return Err(Error::Index(format!(
                "alpha({m},{n}) outside table bounds m<={}, n<={}",
                self.m_max, self.n_max
            )));
        }
        Ok(self.rows[n][m].clone())
    }

    pub fn entries(&self) -> Vec<AlphaEntry> {
        let mut v = Vec::new();
        for n in 0..=self.n_max {
            for m in 0..=self.m_max {
                v.push(AlphaEntry { m, n, coeffs: self.rows[n][m].to_strings() });
            }
        }
        v
    }

    /// Entries (m, n) where two tables differ.
    pub fn diff(&self, other: &AlphaTable) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for n in 0..=self.n_max.min(other.n_max) {
            for m in 0..=self.m_max.min(other.m_max) {
                if self.rows[n][m] != other.rows[n][m] {
                    out.push((m, n));
                }
            }
        }
        out
    }
}

fn check_caps(m_max: usize, n_max: usize) -> Result<()> {
    if m_max > M_CAP || n_max > N_CAP {
        return Err(Error::Index(format!(
            "table bounds m_max={m_max}, n_max={n_max} exceed caps {M_CAP}, {N_CAP}"
        )));
    }
    Ok(())
}

/// Table from the closed recurrences.
///
/// Even → odd (d = 2n):
///   α_{2m+1,2n+1} = α_{2m+1,2n} − (4m+1)/2·α_{2m,2n}
///   α_{2m,2n+1}   = −(4m−1)/2·α_{2m−1,2n} − α_{2m,2n}
/// Odd → even (d = 2n+1):
///   α_{2m,2n+2}   = α_{2m,2n+1} − (4m−1)/2·α_{2m−1,2n+1}
///   α_{2m+1,2n+2} = −α_{2m+1,2n+1} − (4m+1)/2·α_{2m,2n+1}
pub fn recurrence_table(m_max: usize, n_max: usize) -> Result<AlphaTable> {
    check_caps(m_max, n_max)?;
    let mut rows = vec![base_row(m_max)];
    for d in 0..n_max {
        let prev = &rows[d];
        let below = |j: usize| if j == 0 { NuPoly::zero() } else { prev[j - 1].clone() };
        let next: Vec<NuPoly> = (0..=m_max)
            .map(|j| {
                // j = 2m or 2m+1; factor (2j−1)/2 is (4m−1)/2 resp. (4m+1)/2
                let factor = rat(2 * j as i64 - 1, 2);
                let shifted = below(j).scale(&factor);
                let even_d = d % 2 == 0;
                let even_j = j % 2 == 0;
                match (even_d, even_j) {
                    (true, false) => &prev[j] - &shifted,
                    (true, true) => &(-&shifted) - &prev[j],
                    (false, true) => &prev[j] - &shifted,
                    (false, false) => &(-&prev[j]) - &shifted,
                }
            })
            .collect();
        rows.push(next);
    }
    Ok(AlphaTable::from_rows(m_max, n_max, rows))
}

/// Recurrence-built table, verified entry-for-entry against the
/// differentiation oracle.
pub fn build_alpha_table(m_max: usize, n_max: usize) -> Result<AlphaTable> {
    let table = recurrence_table(m_max, n_max)?;
    let oracle = alpha_oracle(m_max, n_max)?;
    if let Some(&(m, n)) = table.diff(&oracle).first() {
        return Err(Error::Build { m, n });
    }
    Ok(table)
}

/// Full-size table (m ≤ 16, n ≤ 12), built and cross-checked once.
pub fn shared_table() -> &'static AlphaTable {
    static T: OnceLock<AlphaTable> = OnceLock::new();
    T.get_or_init(|| build_alpha_table(M_CAP, N_CAP).expect("alpha recurrences disagree with oracle"))
}

/// α_{m,n}(ν) in binary64.
pub fn eval_alpha(t: &AlphaTable, m: usize, n: usize, nu: f64) -> Result<f64> {
    Ok(t.get(m as i64, n)?.eval(nu))
}

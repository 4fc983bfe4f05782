//! Ground truth for the α table by formal differentiation.
//!
//! J^(d)(x) ∝ Σ c·x^(−e/2)·{cos ω | sin ω} is differentiated term by term:
//! d/dx x^(−e/2) = −(e/2)·x^(−(e+2)/2), cos′ = −sin, sin′ = cos.  Only the
//! base row enters; no closed recurrence is used.

use super::alpha::{base_row, AlphaTable, M_CAP, N_CAP};
use super::nupoly::{rat, NuPoly};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Trig {
    Cos,
    Sin,
}

/// Formal series: (e, trig) ↦ coefficient of x^(−e/2)·trig(ω).
pub type FormalSeries = BTreeMap<(u32, Trig), NuPoly>;

fn add_term(s: &mut FormalSeries, key: (u32, Trig), c: NuPoly) {
    if c.is_zero() {
        return;
    }
    let entry = s.entry(key).or_default();
    *entry = &*entry + &c;
    if entry.is_zero() {
        s.remove(&key);
    }
}

/// d/dx, dropping terms with exponent e > e_max.
pub fn differentiate(s: &FormalSeries, e_max: u32) -> FormalSeries {
    let mut out = FormalSeries::new();
    for (&(e, trig), c) in s {
        if e + 2 <= e_max {
            add_term(&mut out, (e + 2, trig), c.scale(&rat(-(e as i64), 2)));
        }
        match trig {
            Trig::Cos => add_term(&mut out, (e, Trig::Sin), -c),
            Trig::Sin => add_term(&mut out, (e, Trig::Cos), c.clone()),
        }
    }
    out
}

/// x^(−1/2)·√(πx/2)·J_ν(x)'s amplitude series, i.e. the base row placed at
/// exponents e = 2j+1.
pub fn base_series(m_max: usize) -> FormalSeries {
    let mut s = FormalSeries::new();
    for (j, c) in base_row(m_max).into_iter().enumerate() {
        let trig = if j % 2 == 0 { Trig::Cos } else { Trig::Sin };
        add_term(&mut s, (2 * j as u32 + 1, trig), c);
    }
    s
}

/// Series for J^(d), d = 0..=n_max.
pub fn derivative_series(m_max: usize, n_max: usize) -> Vec<FormalSeries> {
    let e_max = 2 * m_max as u32 + 1;
    let mut out = vec![base_series(m_max)];
    for d in 0..n_max {
        let next = differentiate(&out[d], e_max);
        out.push(next);
    }
    out
}

/// α table read off the differentiated series (multiply back by √x: the
/// coefficient of x^(−j) sits at e = 2j+1).
pub fn alpha_oracle(m_max: usize, n_max: usize) -> Result<AlphaTable> {
    if m_max > M_CAP || n_max > N_CAP {
        return Err(Error::Index(format!("oracle bounds exceed caps {M_CAP}, {N_CAP}")));
    }
    let series = derivative_series(m_max, n_max);
    let rows = series
        .iter()
        .enumerate()
        .map(|(d, s)| {
            (0..=m_max)
                .map(|j| {
                    let trig = if (j + d) % 2 == 0 { Trig::Cos } else { Trig::Sin };
                    s.get(&(2 * j as u32 + 1, trig)).cloned().unwrap_or_default()
                })
                .collect()
        })
        .collect();
    Ok(AlphaTable::from_rows(m_max, n_max, rows))
}

/// Terms sitting in the "wrong" trig slot for their parity; empty when the
/// parity structure assumed by the table holds.
pub fn off_parity_terms(m_max: usize, n_max: usize) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    for (d, s) in derivative_series(m_max, n_max).iter().enumerate() {
        for (&(e, trig), c) in s {
            let j = ((e - 1) / 2) as usize;
            let expect = if (j + d) % 2 == 0 { Trig::Cos } else { Trig::Sin };
            if trig != expect && !c.is_zero() {
                bad.push((j, d));
            }
        }
    }
    bad
}

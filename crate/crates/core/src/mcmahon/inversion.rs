//! Exact reversion of the phase equation.
//!
//! Writing E(u) = Σ α_{2i,d} u^{2i} and O(u) = Σ α_{2i+1,d} u^{2i+1} with
//! u = 1/x, a zero of J^(d) satisfies
//!
//!   x = P + σ·arctan(O(u)/E(u)),   σ = +1 (d even), −1 (d odd),
//!
//! with P the phase constant.  Substituting x = P + c₁/P + c₃/P³ + … and
//! solving order by order gives the correction coefficients c_i as exact
//! polynomials in ν.

use crate::polycoeff::{rat, AlphaTable, NuPoly, Rational};
use num_traits::One;

/// Truncated power series with NuPoly coefficients; `0[i]` multiplies t^i.
#[derive(Clone, Debug, PartialEq)]
struct Series(Vec<NuPoly>);

impl Series {
    fn zero(len: usize) -> Self {
        Series(vec![NuPoly::zero(); len])
    }

    fn len(&self) -> usize {
        self.0.len()
    }

    fn constant(c: NuPoly, len: usize) -> Self {
        let mut s = Self::zero(len);
        s.0[0] = c;
        s
    }

    fn add(&self, o: &Series) -> Series {
        Series(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    fn scale(&self, c: &Rational) -> Series {
        Series(self.0.iter().map(|a| a.scale(c)).collect())
    }

    fn mul(&self, o: &Series) -> Series {
        let n = self.len();
        let mut out = Self::zero(n);
        for i in 0..n {
            if self.0[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                out.0[i + j] = &out.0[i + j] + &(&self.0[i] * &o.0[j]);
            }
        }
        out
    }

    /// Multiply by t (shift up, dropping the overflow term).
    fn shift(&self) -> Series {
        let mut v = vec![NuPoly::zero()];
        v.extend(self.0[..self.len() - 1].iter().cloned());
        Series(v)
    }

    /// Reciprocal; the constant term must be a nonzero rational constant.
    fn recip(&self) -> Series {
        let c0 = &self.0[0];
        assert!(c0.degree() == Some(0), "series constant term must be a nonzero constant");
        let inv0 = Rational::one() / c0.coeff(0);
        let mut b = vec![NuPoly::constant(inv0.clone())];
        for i in 1..self.len() {
            let mut acc = NuPoly::zero();
            for j in 1..=i {
                acc = &acc + &(&self.0[j] * &b[i - j]);
            }
            b.push(acc.scale(&-inv0.clone()));
        }
        Series(b)
    }

    /// self(g(t)) for g with zero constant term.
    fn compose(&self, g: &Series) -> Series {
        debug_assert!(g.0[0].is_zero());
        let n = self.len();
        let mut acc = Series::constant(self.0[n - 1].clone(), n);
        for i in (0..n - 1).rev() {
            acc = acc.mul(g);
            acc.0[0] = &acc.0[0] + &self.0[i];
        }
        acc
    }
}

/// arctan as a series: Σ (−1)^k t^{2k+1}/(2k+1).
fn arctan_series(len: usize) -> Series {
    let mut s = Series::zero(len);
    for (i, c) in s.0.iter_mut().enumerate().skip(1).step_by(2) {
        let k = (i / 2) as i64;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        *c = NuPoly::constant(rat(sign, i as i64));
    }
    s
}

/// Correction coefficients `c[i]` of P^{−i} (so c[0] = 0 and even entries
/// vanish) for derivative order d, computed through P^{−(len−2)}.
///
/// Needs α_{j,d} for j < len − 1.
pub(crate) fn correction_series(table: &AlphaTable, d: usize, len: usize) -> Vec<NuPoly> {
    assert!(len >= 2 && len - 2 <= table.m_max && d <= table.n_max);
    let mut even = Series::zero(len);
    let mut odd = Series::zero(len);
    for j in 0..len {
        let a = if j <= table.m_max { table.get(j as i64, d).unwrap() } else { NuPoly::zero() };
        if j % 2 == 0 {
            even.0[j] = a;
        } else {
            odd.0[j] = a;
        }
    }
    let ratio = odd.mul(&even.recip());
    let sigma = if d % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
    let h = arctan_series(len).compose(&ratio).scale(&sigma);

    // y(v) = x·v with v = 1/P satisfies y = 1 + v·h(v/y); each pass fixes
    // one more order.
    let one = Series::constant(NuPoly::one(), len);
    let mut y = one.clone();
    for _ in 0..len {
        let u = y.recip().shift();
        y = one.add(&h.compose(&u).shift());
    }
    // x = y/v: coefficient of v^{i} in x is y[i+1]
    let mut c: Vec<NuPoly> = y.0[1..].to_vec();
    c.push(NuPoly::zero());
    c.truncate(len - 1);
    c
}

/// Closed-form candidates for the cubic coefficient c₃ in terms of
/// r₁ = α₁/α₀ and the α_{j,d} (α₀ = ±1, so all quotients are polynomials).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubicForm {
    /// even d: α₃/α₀ − α₁α₂/α₀² − r₁³/3 − r₁²
    EvenDirect,
    /// odd d: −(r₁² + α₃/α₀ − α₁α₂/α₀² − r₁³/3)
    OddSum,
    /// odd d: −(r₁²·α₃/α₀ − α₁α₂/α₀² − r₁³/3), the variant with a product
    /// where a sum belongs
    OddProduct,
}

impl CubicForm {
    pub fn label(self) -> &'static str {
        match self {
            CubicForm::EvenDirect => "a3/a0 - a1*a2/a0^2 - r1^3/3 - r1^2",
            CubicForm::OddSum => "-(r1^2 + a3/a0 - a1*a2/a0^2 - r1^3/3)",
            CubicForm::OddProduct => "-(r1^2*a3/a0 - a1*a2/a0^2 - r1^3/3)",
        }
    }

    pub fn for_parity(d: usize) -> &'static [CubicForm] {
        if d % 2 == 0 {
            &[CubicForm::EvenDirect]
        } else {
            &[CubicForm::OddSum, CubicForm::OddProduct]
        }
    }

    pub(crate) fn evaluate(self, table: &AlphaTable, d: usize) -> NuPoly {
        let a = |j: i64| table.get(j, d).unwrap();
        let inv0 = Rational::one() / a(0).coeff(0);
        let r1 = a(1).scale(&inv0);
        let r1sq = &r1 * &r1;
        let r1cube = (&r1sq * &r1).scale(&rat(1, 3));
        let a3 = a(3).scale(&inv0);
        let a12 = (&a(1) * &a(2)).scale(&(&inv0 * &inv0));
        match self {
            CubicForm::EvenDirect => &(&(&a3 - &a12) - &r1cube) - &r1sq,
            CubicForm::OddSum => -&(&(&(&r1sq + &a3) - &a12) - &r1cube),
            CubicForm::OddProduct => -&(&(&(&r1sq * &a3) - &a12) - &r1cube),
        }
    }
}

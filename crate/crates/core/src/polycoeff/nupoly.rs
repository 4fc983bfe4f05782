//! Polynomials in ν with exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Rational = BigRational;

pub fn rat(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Polynomial in ν; `coeffs[i]` multiplies ν^i.  Trailing zeros are trimmed,
/// so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct NuPoly {
    coeffs: Vec<Rational>,
}

impl NuPoly {
    pub fn zero() -> Self {
        NuPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// c·ν^deg
    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut v = vec![Rational::zero(); deg + 1];
        v[deg] = c;
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        NuPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// True if every odd power of ν has a zero coefficient.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    pub fn eval_exact(&self, nu: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * nu + c)
    }

    pub fn eval(&self, nu: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * nu + rat_to_f64(c))
    }

    /// Coefficients as "p/q" strings (integers print without a denominator).
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(i.into())).collect(),
        )
    }

    /// Antiderivative vanishing at 0.
    pub fn integral(&self) -> Self {
        let mut v = vec![Rational::zero()];
        v.extend(self.coeffs.iter().enumerate().map(|(i, c)| c / Rational::from_integer((i + 1).into())));
        Self::from_coeffs(v)
    }

    /// f64 coefficients, lowest power first.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rat_to_f64).collect()
    }
}

impl Add for &NuPoly {
    type Output = NuPoly;
    fn add(self, rhs: &NuPoly) -> NuPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        NuPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &NuPoly {
    type Output = NuPoly;
    fn sub(self, rhs: &NuPoly) -> NuPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        NuPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &NuPoly {
    type Output = NuPoly;
    fn neg(self) -> NuPoly {
        NuPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &NuPoly {
    type Output = NuPoly;
    fn mul(self, rhs: &NuPoly) -> NuPoly {
        if self.is_zero() || rhs.is_zero() {
            return NuPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        NuPoly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for NuPoly {
            type Output = NuPoly;
            fn $m(self, rhs: NuPoly) -> NuPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for NuPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => {}
                (_, false) => write!(f, "{a}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "nu")?,
                _ => write!(f, "nu^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

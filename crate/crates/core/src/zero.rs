//! Query and result types shared by every zero estimator.

use crate::error::{Error, Result};
use crate::specfun::DERIV_CAP;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Identifies j^(n)_{ν,k}; `k` is the index argument of the estimator,
/// which is not always the position of the zero it approximates (see
/// [`ZeroEstimate::target_index`]).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ZeroQuery {
    pub n: u32,
    pub nu: f64,
    pub k: u32,
}

impl ZeroQuery {
    /// Checks k ≥ 1, finite ν, n within the derivative cap and ν ≥ n − 1.
    /// At ν = n − 1 the origin is a zero of J^(n) and only positive zeros
    /// are counted.
    pub fn new(n: u32, nu: f64, k: u32) -> Result<Self> {
        if k < 1 {
            return Err(Error::Index(format!("zero index k={k} must be >= 1")));
        }
        if !nu.is_finite() {
            return Err(Error::Domain(format!("order nu={nu} is not finite")));
        }
        if n > DERIV_CAP {
            return Err(Error::CapExceeded { n, cap: DERIV_CAP });
        }
        if nu < n as f64 - 1.0 {
            return Err(Error::Applicability(format!(
                "nu={nu} below n-1={}: zeros of J^({n}) need not be real and simple",
                n as f64 - 1.0
            )));
        }
        Ok(ZeroQuery { n, nu, k })
    }

    /// True when J^(n)_ν vanishes at the origin (ν = n − 1, n ≥ 1).
    pub fn origin_is_zero(&self) -> bool {
        self.n >= 1 && self.nu == self.n as f64 - 1.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    /// McMahon expansion with 1..=3 terms.
    Mcmahon(u8),
    /// Large-order Airy-frame expansion of order 1..=3.
    LargeNu(u8),
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Mcmahon(t) => write!(f, "mcmahon-{t}"),
            Method::LargeNu(t) => write!(f, "large-nu-{t}"),
            Method::Oracle => f.write_str("oracle"),
        }
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("unknown method '{s}'"));
        if s == "oracle" {
            return Ok(Method::Oracle);
        }
        let (head, t) = s.rsplit_once('-').ok_or_else(bad)?;
        let t: u8 = t.parse().map_err(|_| bad())?;
        if !(1..=3).contains(&t) {
            return Err(bad());
        }
        match head {
            "mcmahon" => Ok(Method::Mcmahon(t)),
            "large-nu" => Ok(Method::LargeNu(t)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Method {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An estimate of one zero.
///
/// `target_index` is the position (1-based, counting positive zeros only)
/// of the zero of J^(n)_ν that `value` approximates.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZeroEstimate {
    pub query: ZeroQuery,
    pub target_index: u32,
    pub value: f64,
    pub method: Method,
    /// Rigorous radius |zero − value| ≤ bound; present only when applicable.
    pub bound: Option<f64>,
    pub applicable: bool,
}

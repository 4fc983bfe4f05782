//! Zeros of derivatives of Bessel functions of the first kind.
//!
//! * [`specfun`] — J_ν, J_ν^(n), Ai, Ai′ and Airy zeros.
//! * [`polycoeff`] — exact α_{m,n}(ν) coefficient tables of the large-x
//!   amplitude series, with a term-by-term differentiation cross-check.
//! * [`mcmahon`] — large-k zero expansions and certified error bounds.
//! * [`uniform`] — large-ν expansions in the Airy turning-point frame.
//! * [`oracle`] — brute-force sign-change scanning for ground truth.
//! * [`zero`] — query/estimate types shared by all estimators.
//! * [`harness`] — sweeps and certificates shared by the CLI and benches.

pub mod error;
pub mod exec;
pub mod harness;
pub mod mcmahon;
pub mod oracle;
pub mod polycoeff;
pub mod specfun;
pub mod uniform;
pub mod zero;

pub use error::{Error, Result};
pub use exec::Exec;
pub use zero::{Method, ZeroEstimate, ZeroQuery};

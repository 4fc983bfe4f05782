//! Floating-point special functions: J_ν and its derivatives, Ai, Ai′ and
//! the negative Airy zeros.

mod airy;
mod bessel;
mod gamma;

pub use airy::{
    airy_ai, airy_ai_prime, airy_prime_zero, airy_zero, table as airy_zero_table, AiryZeroTable,
    AIRY_ZERO_CAP,
};
pub use bessel::{bessel_j, bessel_j_deriv, EvalPoint, DERIV_CAP};

pub(crate) use airy::ai_pair;
pub(crate) use bessel::j_deriv_unchecked;

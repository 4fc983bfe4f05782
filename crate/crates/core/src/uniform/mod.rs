//! Large-order (fixed k) zeros through the Airy turning-point frame.
//!
//! - [`turning`]: ζ(x), x(ζ), φ, ψ_n and χ_n;
//! - [`olver`]: the coefficient functions A_k, B_k, C_k, D_k (k ≤ 1);
//! - [`reduction`]: exact J^(n) = β_n J′ + γ_n J;
//! - [`chain`]: A_{s,n}, B_{s,n} by the derivative chain and by the reduction;
//! - [`zeros`]: the order 1–3 estimates and the Airy-family check.

pub mod chain;
pub mod olver;
pub mod reduction;
pub mod turning;
pub mod zeros;

pub use chain::{reduced_coefficients, uniform_coefficient_step, CoefficientChain, CHAIN_CAP};
pub use olver::{debye_polynomials, j_uniform, olver_coefficients, OlverCoeffs};
pub use reduction::{deriv_reduction, Bivar, DerivReduction, REDUCTION_CAP};
pub use turning::{chi, chi_series_coeffs, phi, psi_n, x_of_zeta, x_series, zeta_of_x, TurningPoint};
pub use zeros::{
    airy_derivative_zero, airy_family_cross_check, large_nu_target_index, large_nu_zero, large_nu_zero_with,
    uniform_approximant, AiryFamily, FamilyCheck, FAMILY_CHECK_NU, NU_MIN,
};

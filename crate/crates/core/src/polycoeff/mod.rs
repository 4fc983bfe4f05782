//! Exact coefficient tables α_{m,n}(ν) and their differentiation oracle.

mod alpha;
mod nupoly;
mod oracle;

pub use alpha::{
    a_s_polynomial, build_alpha_table, eval_alpha, recurrence_table, shared_table, AlphaEntry,
    AlphaTable, M_CAP, N_CAP,
};
pub use nupoly::{rat, rat_to_f64, NuPoly, Rational};
pub use oracle::{alpha_oracle, derivative_series, differentiate, off_parity_terms, FormalSeries, Trig};

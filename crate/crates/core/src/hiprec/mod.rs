//! Multiprecision special functions on the real line.

pub mod adamchik;
pub mod constants;
pub mod context;
pub mod gamma;
pub mod polylog;
pub mod product;
pub mod zeta;

pub use adamchik::{adamchik_psi_integral, bernoulli_poly_real};
pub use constants::Constants;
pub use context::{format_digits, format_real, PrecisionContext, Real, DEFAULT_BITS};
pub use gamma::{digamma, log_gamma, polygamma};
pub use polylog::{polylog, Polylog};
pub use product::{f_closed, f_product_partial, f_term};
pub use zeta::{
    beta_sderiv_neg_even, beta_sderiv_neg_odd, dirichlet_beta, dirichlet_beta_sderiv,
    dirichlet_eta, dirichlet_lambda, hurwitz_zeta, hurwitz_zeta_both, hurwitz_zeta_diff,
    hurwitz_zeta_sderiv, riemann_zeta, zeta_sderiv, zeta_sderiv_neg_even,
};

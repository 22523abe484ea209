//! Closed forms: ψ-based sech integrals, ζ'/log Γ forms in T for L = 1..4, exact
//! integer-T combinations, the T = 0 recurrences and the infinite products.

pub mod combination;
pub mod hurwitz;
pub mod products;
pub mod recurrence;
pub mod sech;
pub mod spec;
pub mod symbolic;

pub use combination::{Basis, ConstantCombination};
pub use hurwitz::tanh_over_x_sech_exp;
pub use products::{infinite_product_beta2, infinite_product_zdot};
pub use recurrence::{
    beta_recurrence_coeffs, beta_recurrence_eval, recurrence_combination, tanh_over_x_power,
    tanh_over_x_power_coeffs, zeta_recurrence_coeffs, zeta_recurrence_eval, PowerIntegral,
};
pub use sech::{
    partial_integration_residual, psi_diff_even, psi_diff_odd, sech_power_exp, tanh_sech_power_exp,
    two_step_recurrence_residual, Residual,
};
pub use spec::{sech_power_exp_oracle, IntegralSpec};
pub use symbolic::{basis_used, tanh_over_x_sech_exp_symbolic};

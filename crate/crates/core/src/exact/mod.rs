//! Exact rational arithmetic: the coefficient tables of the sech and tanh
//! derivative expansions, their normalized inverses, and number sequences.

pub mod export;
pub mod numbers;
pub mod tables;

pub use export::{from_csv, from_json, to_csv, to_json};
pub use numbers::{
    alt_power_sum, bernoulli, bernoulli_poly, binomial, central_binomial, euler_number, factorial,
    harmonic, pow2,
};
pub use tables::{
    dn_table, g_table, h_table, normalized_matrices, reduction_coeffs, sech_deriv_coeffs, table,
    tanh_deriv_coeffs, CoeffTable, NormalizedMatrices, TableKind,
};

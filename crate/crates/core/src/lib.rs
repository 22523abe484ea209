//! Arbitrary-precision evaluation and certification of integrals of the form
//!
//! ```text
//! I(N, K, L, T) = ∫₀^∞ (tanh x / x)^N · tanh^K x · sech^L x · e^{-T x} dx
//! ```
//!
//! The crate is organised in layers:
//!
//! * [`exact`]: exact rational coefficient tables (g, h, c, d, u, v, x, y, d_N),
//!   Bernoulli and Euler numbers, alternating power sums, CSV/JSON export.
//! * [`hiprec`]: multiprecision special functions (Hurwitz zeta and its
//!   s-derivative, Dirichlet beta, log-gamma, polygamma, polylog, the f(s) product).
//! * [`quad`]: the independent numerical oracle (double-exponential quadrature,
//!   accelerated series summation, loglog integrals).
//! * [`closed`]: closed forms in T, the integer-T symbolic forms, the recurrence
//!   theorems and the infinite products.
//! * [`suite`]: the identity certification suites and their JSON reports.
//! * [`cli`]: the `hypint` command line front end.
//!
//! Runnable examples live in `examples/`:
//!
//! * `exact_tables`: build and cross-check the coefficient tables
//! * `special_functions`: zeta, beta, polygamma and polylog values
//! * `sech_closed_forms`: ψ-based closed forms for ∫ sech^L e^{-Tx}
//! * `hurwitz_closed_forms`: ∫ tanh(x)/x · sech^L e^{-Tx} for L = 1..4
//! * `integer_t_symbolic`: exact constant combinations at integer T
//! * `recurrence_theorems`: β(2k) and ζ(2k+1) recurrences, powers of tanh(x)/x
//! * `quadrature_oracle`: the oracle against known integrals and series
//! * `infinite_products`: product formulas for β(2) and ζ'(-1)
//! * `functional_equations`: the polylog-weighted identities
//! * `certify`: run a suite and print the report

pub mod closed;
pub mod cli;
pub mod error;
pub mod exact;
pub mod hiprec;
pub mod quad;
pub mod suite;

pub use error::{Error, Result};
pub use hiprec::{PrecisionContext, Real};
pub use rug::{Float, Integer, Rational};

/// Exact rational number in lowest terms with a positive denominator.
pub type BigRational = rug::Rational;

//! The numerical oracle: quadrature, series summation and loglog integrals.
//! Every identity in the crate is checked against values produced here.

pub mod de;
pub mod loglog;
pub mod series;

pub use de::{integrate_finite, integrate_semi_infinite, QuadratureResult};
pub use loglog::{integrate_loglog, integrate_loglog_weight, loglog_prefactor, loglog_weight, LogLogKind};
pub use series::{extrapolate_partial_sums, sum_series, ExtrapolationPlan, SeriesClass, SeriesResult};

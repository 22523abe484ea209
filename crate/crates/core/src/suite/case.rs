//! Cases, reports and the tolerance rule.

use std::collections::BTreeMap;

use rug::Float;
use serde::Serialize;
use serde_json::Value;

use crate::error::Error;
use crate::hiprec::{format_digits, format_real, PrecisionContext};

pub type Params = BTreeMap<String, Value>;

/// Builds a parameter map from (name, value) pairs.
pub fn params<const N: usize>(kv: [(&str, Value); N]) -> Params {
    kv.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One checked identity instance. Numbers are decimal strings.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCase {
    pub id: String,
    pub params: Params,
    pub lhs: String,
    pub rhs: String,
    pub abs_err: String,
    pub rel_err: String,
    pub tolerance: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// max(4·est, 2^-(bits-24), floor).
pub fn tolerance(est: &Float, floor: f64, ctx: &PrecisionContext) -> Float {
    let p = ctx.prec();
    let mut t = ctx.target();
    let four = Float::with_val(p, est * 4u32);
    if four > t {
        t = four;
    }
    let f = Float::with_val(p, floor);
    if f > t {
        t = f;
    }
    t
}

const ERR_DIGITS: usize = 6;

impl IdentityCase {
    /// Compares two values; passes when either the absolute or relative error is
    /// within the tolerance.
    pub fn compare(
        id: &str,
        params: Params,
        lhs: &Float,
        rhs: &Float,
        tol: &Float,
        ctx: &PrecisionContext,
    ) -> IdentityCase {
        let p = ctx.prec();
        let abs = Float::with_val(p, lhs - rhs).abs();
        let scale = Float::with_val(p, lhs.abs_ref()).max(&Float::with_val(p, rhs.abs_ref()));
        let rel = if scale.is_zero() { Float::with_val(p, 0) } else { Float::with_val(p, &abs / &scale) };
        let ok = abs.is_finite() && (abs <= *tol || rel <= *tol);
        IdentityCase {
            id: id.to_string(),
            params,
            lhs: format_real(lhs, ctx),
            rhs: format_real(rhs, ctx),
            abs_err: format_digits(&abs, ERR_DIGITS),
            rel_err: format_digits(&rel, ERR_DIGITS),
            tolerance: format_digits(tol, ERR_DIGITS),
            status: if ok { Status::Pass } else { Status::Fail },
            note: None,
        }
    }

    /// Exact (rational) comparison rendered as a case.
    pub fn exact(id: &str, params: Params, lhs: String, rhs: String, equal: bool) -> IdentityCase {
        IdentityCase {
            id: id.to_string(),
            params,
            lhs,
            rhs,
            abs_err: if equal { "0".into() } else { "nonzero".into() },
            rel_err: if equal { "0".into() } else { "nonzero".into() },
            tolerance: "0".into(),
            status: if equal { Status::Pass } else { Status::Fail },
            note: None,
        }
    }

    /// A case whose evaluation raised an error.
    pub fn failed(id: &str, params: Params, err: &Error) -> IdentityCase {
        IdentityCase {
            id: id.to_string(),
            params,
            lhs: "nan".into(),
            rhs: "nan".into(),
            abs_err: "nan".into(),
            rel_err: "nan".into(),
            tolerance: "nan".into(),
            status: Status::Fail,
            note: Some(err.to_string()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn skipped(mut self, why: impl Into<String>) -> Self {
        self.status = Status::Skipped;
        self.note = Some(why.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

/// Result of running one suite (or all of them).
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub precision_bits: u32,
    pub seed: u64,
    pub trials: Option<u32>,
    pub parameter_ranges: BTreeMap<String, String>,
    pub sub_suites: Vec<String>,
    pub summary: Summary,
    pub cases: Vec<IdentityCase>,
    /// Seconds; the only field allowed to differ between identical runs.
    pub wall_time: f64,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &IdentityCase> {
        self.cases.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Pretty JSON without `wall_time`, stable across identical runs.
    pub fn deterministic_json(&self) -> String {
        let mut v = self.to_json();
        if let Value::Object(m) = &mut v {
            m.remove("wall_time");
        }
        serde_json::to_string_pretty(&v).expect("report serializes")
    }

    pub(crate) fn summarize(cases: &[IdentityCase]) -> Summary {
        let mut s = Summary::default();
        for c in cases {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn status_rule() {
        let ctx = PrecisionContext::new(128).unwrap();
        let a = ctx.real(1);
        let b = ctx.real(1.0 + 1e-22);
        let tol = tolerance(&ctx.real(0), 1e-20, &ctx);
        let c = IdentityCase::compare("x", params([("s", json!(1))]), &a, &b, &tol, &ctx);
        assert!(c.passed());
        let b = ctx.real(1.0 + 1e-15);
        assert!(!IdentityCase::compare("x", Params::new(), &a, &b, &tol, &ctx).passed());
        // relative error alone suffices
        let a = ctx.real(1e30);
        let b = ctx.real(1e30) + ctx.real(1e5);
        assert!(IdentityCase::compare("x", Params::new(), &a, &b, &tol, &ctx).passed());
    }

    #[test]
    fn tolerance_takes_the_largest() {
        let ctx = PrecisionContext::new(128).unwrap();
        assert_eq!(tolerance(&ctx.real(1), 1e-20, &ctx), 4);
        assert_eq!(tolerance(&ctx.real(0), 0.0, &ctx), ctx.target());
    }
}

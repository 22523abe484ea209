//! Identity certification suites and their JSON reports.
//!
//! Every suite draws its random parameters from a ChaCha8 stream seeded by
//! `seed` (one stream per suite), so a report depends only on
//! (suite, trials, seed, precision). Cases run in parallel; the report keeps
//! generation order within each case id.

pub mod case;
pub mod functional;
pub mod lemmas;
pub mod misc;
pub mod ramanujan;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use case::{params, tolerance, IdentityCase, Params, Status, SuiteReport, Summary};
pub use functional::{
    all_functional_equations, functional_equation, verify_functional_equation, DirichletKind, FunctionalEquation,
};
pub use misc::{verify_loglog, verify_polygamma_quarter, verify_two_variable};
pub use ramanujan::{limit_case, verify_limit_equation, verify_ramanujan, RamanujanKind};

use crate::error::{Error, Result};
use crate::hiprec::PrecisionContext;
use crate::quad::LogLogKind;

/// Tolerance floor for identities checked against series and polylog sums.
pub const FLOOR_IDENTITY: f64 = 1e-20;
/// Tolerance floor for closed forms and relations checked against plain quadrature.
pub const FLOOR_CLOSED: f64 = 1e-25;
pub const DEFAULT_SEED: u64 = 42;

/// The registered suites, in the order `all` runs them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    PartInt,
    Recurrence2,
    ClosedFormsT,
    Functional,
    Ramanujan,
    Limit,
    Polygamma,
    Loglog,
    Products,
    Theorems,
    All,
}

impl SuiteName {
    pub const SUITES: [SuiteName; 10] = [
        SuiteName::PartInt,
        SuiteName::Recurrence2,
        SuiteName::ClosedFormsT,
        SuiteName::Functional,
        SuiteName::Ramanujan,
        SuiteName::Limit,
        SuiteName::Polygamma,
        SuiteName::Loglog,
        SuiteName::Products,
        SuiteName::Theorems,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::PartInt => "part_int",
            SuiteName::Recurrence2 => "recurrence2",
            SuiteName::ClosedFormsT => "closed_forms_T",
            SuiteName::Functional => "functional",
            SuiteName::Ramanujan => "ramanujan",
            SuiteName::Limit => "limit",
            SuiteName::Polygamma => "polygamma",
            SuiteName::Loglog => "loglog",
            SuiteName::Products => "products",
            SuiteName::Theorems => "theorems",
            SuiteName::All => "all",
        }
    }

    /// Trials used when none are given (suites without random draws ignore it).
    pub fn default_trials(self) -> u32 {
        match self {
            SuiteName::PartInt | SuiteName::Recurrence2 | SuiteName::Products => {
                if self == SuiteName::Products {
                    20
                } else {
                    25
                }
            }
            SuiteName::ClosedFormsT | SuiteName::Ramanujan => 3,
            SuiteName::Functional => 1,
            _ => 0,
        }
    }

    fn stream(self) -> u64 {
        SuiteName::SUITES.iter().position(|s| *s == self).unwrap_or(0) as u64
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SuiteName::SUITES
            .into_iter()
            .chain([SuiteName::All])
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Ranges random parameters are drawn from.
pub fn parameter_ranges() -> BTreeMap<String, String> {
    [
        ("s", "[0.5, 4]"),
        ("alpha", "[0.3, 3]"),
        ("T", "[0, 6]"),
        ("L", "[0.5, 5]"),
        ("N (part_int)", "0..=3"),
        ("K (part_int)", "0..=3"),
        ("N (ramanujan)", "1..=3, 0..=3 for sech"),
        ("m (sech forms)", "1..=8"),
        ("s, b (two-variable)", "[0.25, 4]"),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v.to_string()))
    .collect()
}

// Draws are rounded to 6 decimals so parameters print exactly.
fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo..=hi) * 1e6).round() / 1e6
}

type Job<'a> = Box<dyn Fn() -> Vec<IdentityCase> + Send + Sync + 'a>;

fn one<'a>(f: impl Fn() -> IdentityCase + Send + Sync + 'a) -> Job<'a> {
    Box::new(move || vec![f()])
}

fn jobs<'a>(name: SuiteName, trials: u32, seed: u64, ctx: &'a PrecisionContext) -> Vec<Job<'a>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(name.stream());
    let mut out: Vec<Job<'a>> = Vec::new();
    match name {
        SuiteName::PartInt => {
            for _ in 0..trials {
                let n = rng.gen_range(0..=3u32);
                let k = rng.gen_range(0..=3u32);
                let l = uniform(&mut rng, 0.5, 5.0);
                let t = uniform(&mut rng, 0.0, 6.0);
                out.push(one(move || lemmas::part_int_case(n, k, l, t, ctx)));
            }
        }
        SuiteName::Recurrence2 => {
            for _ in 0..trials {
                let l = uniform(&mut rng, 0.5, 5.0);
                let t = uniform(&mut rng, 0.0, 6.0);
                out.push(one(move || lemmas::recurrence2_case(l, t, ctx)));
            }
        }
        SuiteName::ClosedFormsT => {
            for l in 1..=4u32 {
                for t in 0..=12u64 {
                    out.push(Box::new(move || lemmas::integer_t_triple(l, t, ctx)));
                }
            }
            for l in 1..=4u32 {
                for _ in 0..trials {
                    let t = uniform(&mut rng, 0.0, 6.0);
                    out.push(one(move || lemmas::continuous_t_case(l, t, ctx)));
                }
            }
            for _ in 0..trials {
                let m = rng.gen_range(1..=8u32);
                let t = uniform(&mut rng, 0.0, 6.0);
                out.push(Box::new(move || lemmas::sech_forms_cases(m, t, ctx)));
            }
        }
        SuiteName::Functional => {
            let mut draws: Vec<(u32, f64)> = vec![(3, 2.0), (1, 1.5), (8, 1.0)];
            for id in 1..=8u32 {
                if !draws.contains(&(id, 1.0)) {
                    draws.push((id, 1.0));
                }
                for _ in 0..trials {
                    draws.push((id, uniform(&mut rng, 0.5, 4.0)));
                }
            }
            for (id, s) in draws {
                out.push(one(move || {
                    let sf = ctx.real(s);
                    verify_functional_equation(id, &sf, ctx).unwrap_or_else(|e| {
                        IdentityCase::failed(&format!("func_eq_{id}"), params([("s", s.into())]), &e)
                    })
                }));
            }
        }
        SuiteName::Ramanujan => {
            for kind in RamanujanKind::ALL {
                let fixed = match kind {
                    RamanujanKind::Coth => (1.0, 1),
                    RamanujanKind::Sech => (1.0, 0),
                    RamanujanKind::Csch => (1.0, 1),
                    RamanujanKind::Tanh => (2.0, 2),
                };
                let mut draws = vec![fixed];
                for _ in 0..trials {
                    draws.push((uniform(&mut rng, 0.3, 3.0), rng.gen_range(kind.min_n()..=3)));
                }
                for (a, n) in draws {
                    out.push(one(move || {
                        verify_ramanujan(kind, &ctx.real(a), n, ctx).unwrap_or_else(|e| {
                            IdentityCase::failed(kind.case_id(), params([("alpha", a.into()), ("N", n.into())]), &e)
                        })
                    }));
                }
            }
        }
        SuiteName::Limit => {
            const ASSERTED: [f64; 3] = [0.1, 0.05, 0.025];
            for n in 1..=2u32 {
                for a in [0.4].into_iter().chain(ASSERTED) {
                    out.push(one(move || {
                        limit_case(n, &ctx.real(a), 0.3, ctx).unwrap_or_else(|e| {
                            IdentityCase::failed("limit_equation", params([("N", n.into()), ("alpha", a.into())]), &e)
                        })
                    }));
                }
                out.push(one(move || {
                    verify_limit_equation(n, &ASSERTED, ctx).unwrap_or_else(|e| {
                        IdentityCase::failed("limit_equation_sequence", params([("N", n.into())]), &e)
                    })
                }));
            }
        }
        SuiteName::Polygamma => {
            for n in 1..=4u32 {
                out.push(Box::new(move || {
                    verify_polygamma_quarter(n, ctx).unwrap_or_else(|e| {
                        vec![IdentityCase::failed("polygamma_quarter", params([("n", n.into())]), &e)]
                    })
                }));
            }
        }
        SuiteName::Loglog => {
            for kind in [LogLogKind::Beta, LogLogKind::Zeta] {
                for n in 1..=2u32 {
                    out.push(one(move || verify_loglog(kind, n, ctx)));
                }
            }
            for l in [1.0, 2.5] {
                out.push(one(move || misc::verify_loglog_sech(l, ctx)));
            }
        }
        SuiteName::Products => {
            out.push(Box::new(move || misc::verify_constant_products(misc::PRODUCT_TERMS, ctx)));
            for s in [0.25, 0.5, 1.0] {
                out.push(one(move || misc::verify_f_product(s, misc::PRODUCT_TERMS, ctx)));
                out.push(one(move || misc::verify_f_series(s, ctx)));
            }
            for _ in 0..trials {
                let s = uniform(&mut rng, 0.25, 4.0);
                let b = uniform(&mut rng, 0.25, 4.0);
                out.push(one(move || verify_two_variable(s, b, ctx)));
            }
        }
        SuiteName::Theorems => {
            for n in 2..=7 {
                out.push(Box::new(move || lemmas::power_integral_cases(n, ctx)));
            }
            for n in 0..=5 {
                out.push(one(move || lemmas::recurrence_case(true, n, ctx)));
            }
            for n in 1..=6 {
                out.push(one(move || lemmas::recurrence_case(false, n, ctx)));
            }
            for l in 1..=4 {
                out.push(one(move || lemmas::recurrence_vs_symbolic_case(l)));
            }
            out.push(Box::new(|| lemmas::matrix_cases(20)));
        }
        SuiteName::All => {}
    }
    out
}

fn run_one(name: SuiteName, trials: Option<u32>, seed: u64, ctx: &PrecisionContext) -> Vec<IdentityCase> {
    let t = trials.unwrap_or_else(|| name.default_trials());
    let js = jobs(name, t, seed, ctx);
    let mut cases: Vec<IdentityCase> = js.par_iter().map(|j| j()).collect::<Vec<_>>().into_iter().flatten().collect();
    // stable: ties keep generation order
    cases.sort_by(|a, b| a.id.cmp(&b.id));
    cases
}

/// Runs a suite by name. `trials` overrides the per-suite default number of
/// random draws; `all` runs every suite with the same seed.
pub fn run_suite(name: &str, trials: Option<u32>, seed: u64, ctx: &PrecisionContext) -> Result<SuiteReport> {
    let suite: SuiteName = name.parse()?;
    if trials == Some(0) {
        return Err(Error::Domain("trials must be at least 1".into()));
    }
    let start = Instant::now();
    let subs: Vec<SuiteName> = if suite == SuiteName::All { SuiteName::SUITES.to_vec() } else { vec![suite] };
    let mut cases = Vec::new();
    for s in &subs {
        cases.extend(run_one(*s, trials, seed, ctx));
    }
    Ok(SuiteReport {
        suite: suite.as_str().to_string(),
        precision_bits: ctx.bits,
        seed,
        trials,
        parameter_ranges: parameter_ranges(),
        sub_suites: subs.iter().map(|s| s.as_str().to_string()).collect(),
        summary: SuiteReport::summarize(&cases),
        cases,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in SuiteName::SUITES.into_iter().chain([SuiteName::All]) {
            assert_eq!(s.as_str().parse::<SuiteName>().unwrap(), s);
        }
        let ctx = PrecisionContext::new(128).unwrap();
        assert!(matches!(run_suite("bogus", None, 42, &ctx), Err(Error::UnknownSuite(_))));
        assert!(run_suite("part_int", Some(0), 42, &ctx).is_err());
    }

    #[test]
    fn part_int_25_pass() {
        let ctx = PrecisionContext::new(128).unwrap();
        let r = run_suite("part_int", Some(25), 42, &ctx).unwrap();
        assert_eq!(r.cases.len(), 25);
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn draws_are_deterministic() {
        let ctx = PrecisionContext::new(128).unwrap();
        let a = run_suite("recurrence2", Some(4), 7, &ctx).unwrap();
        let b = run_suite("recurrence2", Some(4), 7, &ctx).unwrap();
        assert_eq!(a.deterministic_json(), b.deterministic_json());
        let c = run_suite("recurrence2", Some(4), 8, &ctx).unwrap();
        assert_ne!(a.cases[0].params, c.cases[0].params);
    }
}

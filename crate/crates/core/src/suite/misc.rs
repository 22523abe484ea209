//! Polygamma values at 1/4 and 3/4, loglog integrals, and the product formulas.

use rug::ops::Pow;
use rug::{Float, Integer};
use serde_json::json;

use super::case::{params, tolerance, IdentityCase, Params};
use crate::closed::{infinite_product_beta2, infinite_product_zdot, IntegralSpec};
use crate::error::{Error, Result};
use crate::exact::{bernoulli, euler_number, factorial};
use crate::hiprec::{
    dirichlet_beta, f_closed, f_product_partial, f_term, log_gamma, polygamma, riemann_zeta, zeta_sderiv,
    PrecisionContext,
};
use crate::quad::loglog::sech_loglog_weight;
use crate::quad::{integrate_finite, integrate_loglog, integrate_loglog_weight, loglog_prefactor, sum_series, LogLogKind, SeriesClass};

/// Tolerance of the truncated-product checks.
pub const PRODUCT_TOLERANCE: f64 = 1e-3;
/// Number of factors in the truncated-product checks.
pub const PRODUCT_TERMS: u64 = 10_000;

fn wrap(id: &str, ps: Params, r: Result<IdentityCase>) -> IdentityCase {
    r.unwrap_or_else(|e| IdentityCase::failed(id, ps, &e))
}

/// ψ^{(2n-1)} and ψ^{(2n)} at 1/4 and 3/4 against their Bernoulli/β and Euler/ζ forms.
pub fn verify_polygamma_quarter(n: u32, ctx: &PrecisionContext) -> Result<Vec<IdentityCase>> {
    if n == 0 {
        return Err(Error::UnsupportedParameter("polygamma identities need n >= 1".into()));
    }
    let c = ctx.raised(16);
    let p = c.prec();
    let pi = c.pi();
    let two_n = 2 * n;
    let fact = Float::with_val(p, &factorial(two_n));
    let b = Float::with_val(p, bernoulli(two_n).abs());
    let e = Float::with_val(p, Integer::from(euler_number(two_n).abs_ref()));
    let beta = dirichlet_beta(&c.real(two_n), &c)?;
    let zeta = riemann_zeta(&c.real(two_n + 1), &c)?;

    // 4^{2n-1}/(2n) (π^{2n}(2^{2n}-1)|B_{2n}| ± 2(2n)! β(2n))
    let odd_pre = Float::with_val(p, 4u32).pow(two_n - 1) / two_n;
    let bern = Float::with_val(p, (&pi).pow(two_n)) * (Float::with_val(p, 2u32).pow(two_n) - 1u32) * &b;
    let beta_part = Float::with_val(p, &fact * &beta) * 2u32;
    // 2^{2n-1} (∓π^{2n+1}|E_{2n}| - 2(2n)!(2^{2n+1}-1) ζ(2n+1))
    let even_pre = Float::with_val(p, 2u32).pow(two_n - 1);
    let euler = Float::with_val(p, (&pi).pow(two_n + 1)) * &e;
    let zeta_part = Float::with_val(p, &fact * &zeta) * 2u32 * (Float::with_val(p, 2u32).pow(two_n + 1) - 1u32);

    let forms = [
        (two_n - 1, "1/4", 0.25, Float::with_val(p, &bern + &beta_part) * &odd_pre),
        (two_n - 1, "3/4", 0.75, Float::with_val(p, &bern - &beta_part) * &odd_pre),
        (two_n, "1/4", 0.25, Float::with_val(p, -Float::with_val(p, &euler + &zeta_part)) * &even_pre),
        (two_n, "3/4", 0.75, Float::with_val(p, &euler - &zeta_part) * &even_pre),
    ];
    let mut out = Vec::with_capacity(4);
    for (order, z, zf, rhs) in forms {
        let ps = params([("n", json!(n)), ("order", json!(order)), ("z", json!(z))]);
        let lhs = polygamma(order, &c.real(zf), &c)?;
        let tol = tolerance(&ctx.real(0), super::FLOOR_IDENTITY, ctx);
        out.push(IdentityCase::compare("polygamma_quarter", ps, &lhs, &rhs, &tol, ctx));
    }
    Ok(out)
}

/// β(2N) or ζ(2N+1) against its loglog integral representation.
pub fn verify_loglog(kind: LogLogKind, n: u32, ctx: &PrecisionContext) -> IdentityCase {
    let id = match kind {
        LogLogKind::Beta => "loglog_beta",
        LogLogKind::Zeta => "loglog_zeta",
    };
    let ps = params([("N", json!(n))]);
    let run = || -> Result<IdentityCase> {
        let q = integrate_loglog(kind, n, ctx)?;
        let pre = loglog_prefactor(kind, n, ctx);
        let lhs = Float::with_val(ctx.prec(), &pre * &q.value);
        let rhs = match kind {
            LogLogKind::Beta => dirichlet_beta(&ctx.real(2 * n), ctx)?,
            LogLogKind::Zeta => riemann_zeta(&ctx.real(2 * n + 1), ctx)?,
        };
        let est = Float::with_val(ctx.prec(), pre.abs() * &q.est_error);
        let tol = tolerance(&est, super::FLOOR_IDENTITY, ctx);
        Ok(IdentityCase::compare(id, ps.clone(), &lhs, &rhs, &tol, ctx))
    };
    wrap(id, ps.clone(), run())
}

/// ∫ tanh(x)/x sech^L x dx as a loglog integral against direct quadrature.
pub fn verify_loglog_sech(l: f64, ctx: &PrecisionContext) -> IdentityCase {
    let id = "loglog_sech";
    let ps = params([("L", json!(l))]);
    let run = || -> Result<IdentityCase> {
        let lf = ctx.real(l);
        let p = ctx.prec() + 16;
        let q = integrate_loglog_weight(&|x: &Float| sech_loglog_weight(&lf, x, p), ctx, None)?;
        let o = IntegralSpec::new(1, 0, &lf, &ctx.real(0))?.integral(ctx)?;
        let est = Float::with_val(ctx.prec(), &q.est_error + &o.est_error);
        let tol = tolerance(&est, super::FLOOR_IDENTITY, ctx);
        Ok(IdentityCase::compare(id, ps.clone(), &q.value, &o.value, &tol, ctx))
    };
    wrap(id, ps.clone(), run())
}

/// Truncated products for β(2) and ζ'(-1) at `terms` factors.
pub fn verify_constant_products(terms: u64, ctx: &PrecisionContext) -> Vec<IdentityCase> {
    let tol = tolerance(&ctx.real(0), PRODUCT_TOLERANCE, ctx);
    let mut out = Vec::new();
    for id in ["product_beta2", "product_zeta_dot_m1"] {
        let ps = params([("terms", json!(terms))]);
        let run = || -> Result<IdentityCase> {
            let (lhs, rhs) = if id == "product_beta2" {
                (infinite_product_beta2(terms, ctx)?, dirichlet_beta(&ctx.real(2), ctx)?)
            } else {
                (infinite_product_zdot(terms, ctx)?, zeta_sderiv(&ctx.real(-1), ctx)?)
            };
            Ok(IdentityCase::compare(id, ps.clone(), &lhs, &rhs, &tol, ctx))
        };
        out.push(wrap(id, ps.clone(), run()));
    }
    out
}

/// f_product_partial(s, terms) against f_closed(s).
pub fn verify_f_product(s: f64, terms: u64, ctx: &PrecisionContext) -> IdentityCase {
    let id = "f_product";
    let ps = params([("s", json!(s)), ("terms", json!(terms))]);
    let run = || -> Result<IdentityCase> {
        let sf = ctx.real(s);
        let lhs = f_product_partial(&sf, terms, ctx)?;
        let rhs = f_closed(&sf, ctx)?;
        let tol = tolerance(&ctx.real(0), PRODUCT_TOLERANCE, ctx);
        Ok(IdentityCase::compare(id, ps.clone(), &lhs, &rhs, &tol, ctx))
    };
    wrap(id, ps.clone(), run())
}

/// Σ_k [f_term(s,k) - f_term(b,k)], extrapolated (the terms are O(1/k²)).
pub fn f_difference_series(s: &Float, b: &Float, ctx: &PrecisionContext) -> Result<crate::quad::SeriesResult> {
    if *s <= 0 || *b <= 0 {
        return Err(Error::Domain("f(s) needs s > 0".into()));
    }
    let p = ctx.prec() + 64;
    let term = |k: u64| -> Result<Float> { Ok(f_term(s, k, p) - f_term(b, k, p)) };
    sum_series(&term, 0, &SeriesClass::Algebraic { tail_exponent: 1.0, even_only: false }, ctx, None)
}

/// f(s) - f(b) from the product against
/// ∫_b^s (log Γ(z+½) - log Γ(z)) dz + ¼(log Γ(2b+1) - log Γ(2s+1) + log s - log b) + ½ log 2 (s-b).
pub fn verify_two_variable(s: f64, b: f64, ctx: &PrecisionContext) -> IdentityCase {
    let id = "two_variable_func_eq";
    let ps = params([("s", json!(s)), ("b", json!(b))]);
    let run = || -> Result<IdentityCase> {
        let c = ctx.raised(16);
        let p = c.prec();
        let (sf, bf) = (c.real(s), c.real(b));
        let lhs = f_difference_series(&sf, &bf, ctx)?;
        let g = |z: &Float| -> Result<Float> {
            let zh = Float::with_val(p, z + 0.5f64);
            Ok(log_gamma(&zh, &c)? - log_gamma(z, &c)?)
        };
        let q = integrate_finite(&g, &bf, &sf, ctx, None)?;
        let lg = |z: &Float| log_gamma(&Float::with_val(p, Float::with_val(p, z * 2u32) + 1u32), &c);
        let mut rhs = Float::with_val(p, &q.value);
        let quarter = lg(&bf)? - lg(&sf)? + Float::with_val(p, sf.ln_ref()) - Float::with_val(p, bf.ln_ref());
        rhs += quarter / 4u32;
        rhs += c.ln2() * Float::with_val(p, &sf - &bf) / 2u32;
        let est = Float::with_val(ctx.prec(), &lhs.est_error + &q.est_error);
        let tol = tolerance(&est, super::FLOOR_IDENTITY, ctx);
        Ok(IdentityCase::compare(id, ps.clone(), &lhs.value, &rhs, &tol, ctx))
    };
    wrap(id, ps.clone(), run())
}

/// The product series for f(s), extrapolated, against f_closed(s).
pub fn verify_f_series(s: f64, ctx: &PrecisionContext) -> IdentityCase {
    let id = "f_series";
    let ps = params([("s", json!(s))]);
    let run = || -> Result<IdentityCase> {
        let sf = ctx.real(s);
        let p = ctx.prec() + 64;
        let term = |k: u64| -> Result<Float> { Ok(f_term(&sf, k, p)) };
        let r = sum_series(&term, 0, &SeriesClass::Algebraic { tail_exponent: 1.0, even_only: false }, ctx, None)?;
        let rhs = f_closed(&sf, ctx)?;
        let tol = tolerance(&r.est_error, super::FLOOR_IDENTITY, ctx);
        Ok(IdentityCase::compare(id, ps.clone(), &r.value, &rhs, &tol, ctx))
    };
    wrap(id, ps.clone(), run())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygamma_quarter_n1_to_4() {
        let ctx = PrecisionContext::new(128).unwrap();
        for n in 1..=4 {
            for c in verify_polygamma_quarter(n, &ctx).unwrap() {
                assert!(c.passed(), "{c:?}");
            }
        }
        assert!(verify_polygamma_quarter(0, &ctx).is_err());
    }

    #[test]
    fn psi1_quarter_is_pi2_plus_8_catalan() {
        let ctx = PrecisionContext::new(128).unwrap();
        let v = polygamma(1, &ctx.real(0.25), &ctx).unwrap();
        let want = ctx.pi().square() + dirichlet_beta(&ctx.real(2), &ctx).unwrap() * 8u32;
        assert!(Float::with_val(ctx.prec(), v - want).abs() < 1e-35);
    }

    #[test]
    fn loglog_cases() {
        let ctx = PrecisionContext::new(128).unwrap();
        for kind in [LogLogKind::Beta, LogLogKind::Zeta] {
            for n in 1..=2 {
                let c = verify_loglog(kind, n, &ctx);
                assert!(c.passed(), "{c:?}");
            }
        }
        assert!(verify_loglog_sech(2.5, &ctx).passed());
    }

    #[test]
    fn products() {
        let ctx = PrecisionContext::new(128).unwrap();
        for c in verify_constant_products(PRODUCT_TERMS, &ctx) {
            assert!(c.passed(), "{c:?}");
        }
        for s in [0.25, 0.5, 1.0] {
            assert!(verify_f_product(s, PRODUCT_TERMS, &ctx).passed());
            let c = verify_f_series(s, &ctx);
            assert!(c.passed(), "{c:?}");
        }
        let c = verify_two_variable(2.5, 0.3, &ctx);
        assert!(c.passed(), "{c:?}");
    }
}

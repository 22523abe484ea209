//! Cases for the quadrature-level relations, the closed forms in T and the
//! T = 0 theorems.

use rug::Rational;
use serde_json::json;

use super::case::{params, tolerance, IdentityCase, Params};
use crate::closed::{
    beta_recurrence_eval, partial_integration_residual, recurrence_combination, sech_power_exp, tanh_over_x_power,
    tanh_over_x_power_coeffs, tanh_over_x_sech_exp, tanh_over_x_sech_exp_symbolic, tanh_sech_power_exp,
    two_step_recurrence_residual, zeta_recurrence_eval, IntegralSpec, Residual,
};
use crate::error::Result;
use crate::exact::tables::{
    is_identity, multiply_lower, sech_deriv_explicit, sech_deriv_recurrence, tanh_deriv_explicit,
    tanh_deriv_recurrence,
};
use crate::exact::normalized_matrices;
use crate::hiprec::PrecisionContext;

fn wrap(id: &str, ps: Params, r: Result<IdentityCase>) -> IdentityCase {
    r.unwrap_or_else(|e| IdentityCase::failed(id, ps, &e))
}

fn residual_case(id: &str, ps: Params, r: &Residual, ctx: &PrecisionContext) -> IdentityCase {
    let tol = tolerance(&r.oracle_error, super::FLOOR_CLOSED, ctx);
    IdentityCase::compare(id, ps, &r.residual, &ctx.real(0), &tol, ctx)
        .with_note(format!("largest term {:.6e}", r.scale.to_f64()))
}

/// Residual of the partial-integration relation at (N, K, L, T).
pub fn part_int_case(n: u32, k: u32, l: f64, t: f64, ctx: &PrecisionContext) -> IdentityCase {
    let id = "part_int_general";
    let ps = params([("N", json!(n)), ("K", json!(k)), ("L", json!(l)), ("T", json!(t))]);
    let run = || -> Result<IdentityCase> {
        let spec = IntegralSpec::new(n, k, &ctx.real(l), &ctx.real(t))?;
        let r = partial_integration_residual(&spec, ctx)?;
        Ok(residual_case(id, ps.clone(), &r, ctx))
    };
    wrap(id, ps.clone(), run())
}

/// Residual of the two-step sech^L recurrence at (L, T).
pub fn recurrence2_case(l: f64, t: f64, ctx: &PrecisionContext) -> IdentityCase {
    let id = "two_step_recurrence";
    let ps = params([("L", json!(l)), ("T", json!(t))]);
    let run = || -> Result<IdentityCase> {
        let r = two_step_recurrence_residual(&ctx.real(l), &ctx.real(t), ctx)?;
        Ok(residual_case(id, ps.clone(), &r, ctx))
    };
    wrap(id, ps.clone(), run())
}

/// Symbolic, continuous and oracle values of ∫ tanh(x)/x sech^L e^{-Tx} at integer T,
/// compared pairwise.
pub fn integer_t_triple(l: u32, t: u64, ctx: &PrecisionContext) -> Vec<IdentityCase> {
    let ps = params([("L", json!(l)), ("T", json!(t))]);
    let ids = ["closed_T_sym_vs_cont", "closed_T_sym_vs_oracle", "closed_T_cont_vs_oracle"];
    let run = || -> Result<Vec<IdentityCase>> {
        let sym = tanh_over_x_sech_exp_symbolic(l, t)?.evaluate(ctx)?;
        let cont = tanh_over_x_sech_exp(l, &ctx.real(t), ctx)?;
        let o = IntegralSpec::new(1, 0, &ctx.real(l), &ctx.real(t))?.integral(ctx)?;
        let exact_tol = tolerance(&ctx.real(0), super::FLOOR_CLOSED, ctx);
        let tol = tolerance(&o.est_error, super::FLOOR_CLOSED, ctx);
        Ok(vec![
            IdentityCase::compare(ids[0], ps.clone(), &sym, &cont, &exact_tol, ctx),
            IdentityCase::compare(ids[1], ps.clone(), &sym, &o.value, &tol, ctx),
            IdentityCase::compare(ids[2], ps.clone(), &cont, &o.value, &tol, ctx),
        ])
    };
    run().unwrap_or_else(|e| ids.iter().map(|id| IdentityCase::failed(id, ps.clone(), &e)).collect())
}

/// Continuous-T closed form against quadrature at real T.
pub fn continuous_t_case(l: u32, t: f64, ctx: &PrecisionContext) -> IdentityCase {
    let id = "closed_T_continuous";
    let ps = params([("L", json!(l)), ("T", json!(t))]);
    let run = || -> Result<IdentityCase> {
        let v = tanh_over_x_sech_exp(l, &ctx.real(t), ctx)?;
        let o = IntegralSpec::new(1, 0, &ctx.real(l), &ctx.real(t))?.integral(ctx)?;
        let tol = tolerance(&o.est_error, super::FLOOR_CLOSED, ctx);
        Ok(IdentityCase::compare(id, ps.clone(), &v, &o.value, &tol, ctx))
    };
    wrap(id, ps.clone(), run())
}

/// ψ-based closed forms of ∫ sech^m e^{-Tx} and ∫ tanh sech^m e^{-Tx} against quadrature.
pub fn sech_forms_cases(m: u32, t: f64, ctx: &PrecisionContext) -> Vec<IdentityCase> {
    let mut out = Vec::new();
    for (id, k) in [("sech_power_exp", 0u32), ("tanh_sech_power_exp", 1)] {
        let ps = params([("m", json!(m)), ("T", json!(t))]);
        let run = || -> Result<IdentityCase> {
            let (tf, mf) = (ctx.real(t), ctx.real(m));
            let v = if k == 0 { sech_power_exp(&mf, &tf, ctx)? } else { tanh_sech_power_exp(m, &tf, ctx)? };
            let o = IntegralSpec::new(0, k, &mf, &tf)?.integral(ctx)?;
            let tol = tolerance(&o.est_error, super::FLOOR_CLOSED, ctx);
            Ok(IdentityCase::compare(id, ps.clone(), &v, &o.value, &tol, ctx))
        };
        out.push(wrap(id, ps.clone(), run()));
    }
    out
}

fn q(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

/// Printed coefficients of ζ(2k+1)/π^{2k} in ∫ (tanh x/x)^N dx, N = 2..7.
pub fn first_six_printed() -> Vec<Vec<Rational>> {
    vec![
        vec![q(14, 1)],
        vec![q(-7, 1), q(186, 1)],
        vec![q(0, 1), q(-496, 3), q(2540, 1)],
        vec![q(0, 1), q(31, 1), q(-3175, 1), q(35770, 1)],
        vec![q(0, 1), q(0, 1), q(5842, 5), q(-57232, 1), q(515844, 1)],
        vec![q(0, 1), q(0, 1), q(-127, 1), q(1402184, 45), q(-1003030, 1), q(7568484, 1)],
    ]
}

fn join(v: &[Rational]) -> String {
    v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ")
}

/// ∫ (tanh x/x)^N: exact coefficients against the printed table and the value
/// against quadrature.
pub fn power_integral_cases(n: u32, ctx: &PrecisionContext) -> Vec<IdentityCase> {
    let ps = params([("N", json!(n))]);
    let mut out = Vec::new();
    if let Some(printed) = first_six_printed().get(n as usize - 2) {
        let id = "first_six_exact";
        out.push(match tanh_over_x_power_coeffs(n) {
            Ok(c) => IdentityCase::exact(id, ps.clone(), join(&c), join(printed), c == *printed),
            Err(e) => IdentityCase::failed(id, ps.clone(), &e),
        });
    }
    let id = "power_integral";
    let run = || -> Result<IdentityCase> {
        let v = tanh_over_x_power(n, ctx)?;
        let o = IntegralSpec::new(n, 0, &ctx.real(0), &ctx.real(0))?.integral(ctx)?;
        let tol = tolerance(&o.est_error, super::FLOOR_CLOSED, ctx);
        Ok(IdentityCase::compare(id, ps.clone(), &v.value, &o.value, &tol, ctx))
    };
    out.push(wrap(id, ps.clone(), run()));
    out
}

/// β(2k) recurrence (sech^{2N+1}) or ζ(2k+1) recurrence (sech^{2N}) against quadrature.
pub fn recurrence_case(beta: bool, n: u32, ctx: &PrecisionContext) -> IdentityCase {
    let id = if beta { "beta_recurrence" } else { "zeta_recurrence" };
    let ps = params([("N", json!(n))]);
    let run = || -> Result<IdentityCase> {
        let (v, l) = if beta { (beta_recurrence_eval(n, ctx)?, 2 * n + 1) } else { (zeta_recurrence_eval(n, ctx)?, 2 * n) };
        let o = IntegralSpec::new(1, 0, &ctx.real(l), &ctx.real(0))?.integral(ctx)?;
        let tol = tolerance(&o.est_error, super::FLOOR_CLOSED, ctx);
        Ok(IdentityCase::compare(id, ps.clone(), &v, &o.value, &tol, ctx))
    };
    wrap(id, ps.clone(), run())
}

/// The recurrence combination for sech^L equals the integer-T form at T = 0, exactly.
pub fn recurrence_vs_symbolic_case(l: u32) -> IdentityCase {
    let id = "recurrence_vs_symbolic";
    let ps = params([("L", json!(l))]);
    let run = || -> Result<IdentityCase> {
        let a = recurrence_combination(l)?.canonical();
        let b = tanh_over_x_sech_exp_symbolic(l, 0)?.canonical();
        Ok(IdentityCase::exact(id, ps.clone(), a.to_string(), b.to_string(), a == b))
    };
    wrap(id, ps.clone(), run())
}

/// u·v = I, x·y = I and the two constructions of the c and d tables, exactly.
pub fn matrix_cases(n_max: u32) -> Vec<IdentityCase> {
    let ps = params([("N_max", json!(n_max))]);
    let mut out = Vec::new();
    match normalized_matrices(n_max) {
        Ok(m) => {
            let uv = is_identity(&multiply_lower(&m.u, &m.v));
            let xy = is_identity(&multiply_lower(&m.x, &m.y));
            out.push(IdentityCase::exact("matrix_uv", ps.clone(), "u·v".into(), "I".into(), uv));
            out.push(IdentityCase::exact("matrix_xy", ps.clone(), "x·y".into(), "I".into(), xy));
        }
        Err(e) => out.push(IdentityCase::failed("matrix_uv", ps.clone(), &e)),
    }
    let c_ok = sech_deriv_explicit(n_max) == sech_deriv_recurrence(n_max);
    let d_ok = tanh_deriv_explicit(n_max) == tanh_deriv_recurrence(n_max);
    out.push(IdentityCase::exact("dual_construction_c", ps.clone(), "explicit".into(), "recurrence".into(), c_ok));
    out.push(IdentityCase::exact("dual_construction_d", ps.clone(), "explicit".into(), "recurrence".into(), d_ok));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_pass() {
        let ctx = PrecisionContext::new(128).unwrap();
        assert!(part_int_case(1, 2, 1.5, 0.5, &ctx).passed());
        assert!(recurrence2_case(2.5, 3.0, &ctx).passed());
        assert!(integer_t_triple(3, 5, &ctx).iter().all(|c| c.passed()));
        assert!(continuous_t_case(4, 2.75, &ctx).passed());
        assert!(sech_forms_cases(5, 1.25, &ctx).iter().all(|c| c.passed()));
        assert!(power_integral_cases(4, &ctx).iter().all(|c| c.passed()));
        assert!(recurrence_case(true, 2, &ctx).passed());
        assert!(recurrence_vs_symbolic_case(3).passed());
        assert!(matrix_cases(8).iter().all(|c| c.passed()));
    }

    #[test]
    fn divergent_part_int_is_reported() {
        let ctx = PrecisionContext::new(128).unwrap();
        let c = part_int_case(0, 1, 0.0, 0.0, &ctx);
        assert!(!c.passed());
        assert!(c.note.unwrap().contains("divergent"));
    }
}

//! T = 0 evaluations for every L: the β(2k) and ζ(2k+1) recurrences, and the
//! integrals of (tanh x / x)^N.

use rug::{Float, Rational};

use super::combination::{Basis, ConstantCombination};
use crate::error::{Error, Result};
use crate::exact::{central_binomial, dn_table, factorial, g_table, h_table, pow2};
use crate::hiprec::context::finite;
use crate::hiprec::{dirichlet_beta, riemann_zeta, PrecisionContext};

/// Coefficients of β(2k)/π^{2k-1}, k = 1..=N+1, in ∫ tanh(x)/x · sech^{2N+1} x dx.
pub fn beta_recurrence_coeffs(n: u32) -> Result<Vec<Rational>> {
    let g = g_table(n + 1)?;
    let pre = Rational::from((central_binomial(n), 1)) / Rational::from(2 * n + 1) * pow2(-2 * n as i64);
    Ok((1..=n + 1)
        .map(|k| {
            let c = pow2(2 * k as i64) * factorial(2 * k - 1) * g.get(n + 1, k);
            Rational::from(&pre * &c)
        })
        .collect())
}

/// Coefficients of ζ(2k+1)/π^{2k}, k = 1..=N, in ∫ tanh(x)/x · sech^{2N} x dx (N ≥ 1).
pub fn zeta_recurrence_coeffs(n: u32) -> Result<Vec<Rational>> {
    if n == 0 {
        return Err(Error::UnsupportedParameter("zeta recurrence needs N >= 1".into()));
    }
    let h = h_table(n)?;
    let pre = pow2(2 * n as i64) / Rational::from(central_binomial(n) * n * n);
    Ok((1..=n)
        .map(|k| {
            let w = Rational::from(2) - pow2(-2 * k as i64);
            let c = w * factorial(2 * k) * h.get(n, k);
            Rational::from(&pre * &c)
        })
        .collect())
}

// Σ_k c_k · value(k) / π^{shift(k)}
fn weighted_sum(
    coeffs: &[Rational],
    ctx: &PrecisionContext,
    value: impl Fn(u32, &PrecisionContext) -> Result<Float>,
    pi_power: impl Fn(u32) -> u32,
) -> Result<Float> {
    let c = ctx.raised(16);
    let p = c.prec();
    let pi = c.pi();
    let mut acc = Float::with_val(p, 0);
    for (i, q) in coeffs.iter().enumerate() {
        let k = i as u32 + 1;
        let mut t = value(k, &c)? * q;
        for _ in 0..pi_power(k) {
            t /= &pi;
        }
        acc += t;
    }
    finite(Float::with_val(ctx.prec(), acc), "recurrence")
}

/// ∫₀^∞ tanh(x)/x · sech^{2N+1} x dx as a combination of β(2), ..., β(2N+2).
pub fn beta_recurrence_eval(n: u32, ctx: &PrecisionContext) -> Result<Float> {
    let coeffs = beta_recurrence_coeffs(n)?;
    weighted_sum(&coeffs, ctx, |k, c| dirichlet_beta(&c.real(2 * k), c), |k| 2 * k - 1)
}

/// ∫₀^∞ tanh(x)/x · sech^{2N} x dx as a combination of ζ(3), ..., ζ(2N+1).
pub fn zeta_recurrence_eval(n: u32, ctx: &PrecisionContext) -> Result<Float> {
    let coeffs = zeta_recurrence_coeffs(n)?;
    weighted_sum(&coeffs, ctx, |k, c| riemann_zeta(&c.real(2 * k + 1), c), |k| 2 * k)
}

/// Recurrence result for sech^L (L ≤ 4) as an exact constant combination.
pub fn recurrence_combination(l: u32) -> Result<ConstantCombination> {
    let mut c = ConstantCombination::zero();
    match l {
        1 | 3 => {
            let basis = [Basis::Beta2OverPi, Basis::Beta4OverPi3];
            for (q, b) in beta_recurrence_coeffs((l - 1) / 2)?.into_iter().zip(basis) {
                c.add(b, q);
            }
        }
        2 | 4 => {
            let basis = [Basis::Zeta3OverPi2, Basis::Zeta5OverPi4];
            for (q, b) in zeta_recurrence_coeffs(l / 2)?.into_iter().zip(basis) {
                c.add(b, q);
            }
        }
        _ => {
            return Err(Error::UnsupportedParameter(format!(
                "the named basis covers sech powers 1..4, got {l}"
            )))
        }
    }
    Ok(c)
}

/// ∫₀^∞ (tanh x / x)^N dx with its exact coefficients of ζ(2k+1)/π^{2k}, k = 1..N-1.
#[derive(Clone, Debug)]
pub struct PowerIntegral {
    pub n: u32,
    pub value: Float,
    pub zeta_coeffs: Vec<Rational>,
}

/// Exact coefficients of ζ(2k+1)/π^{2k} in ∫ (tanh x / x)^N dx, N ≥ 2.
pub fn tanh_over_x_power_coeffs(n: u32) -> Result<Vec<Rational>> {
    if n < 2 {
        return Err(Error::UnsupportedParameter(format!("∫ (tanh x/x)^N needs N >= 2, got {n}")));
    }
    let d = dn_table(n)?;
    let h = h_table(n - 1)?;
    let inv_fact = Rational::from((1, factorial(n - 1)));
    let mut out = Vec::with_capacity(n as usize - 1);
    for k in 1..n {
        let mut inner = Rational::new();
        for j in k..n {
            let w = pow2(2 * j as i64) / Rational::from(central_binomial(j) * j * j);
            inner += w * d.get(n - 1, j) * h.get(j, k);
        }
        let tail = (Rational::from(2) - pow2(-2 * k as i64)) * factorial(2 * k);
        out.push(inner * tail * &inv_fact);
    }
    Ok(out)
}

/// ∫₀^∞ (tanh x / x)^N dx for N ≥ 2.
pub fn tanh_over_x_power(n: u32, ctx: &PrecisionContext) -> Result<PowerIntegral> {
    let zeta_coeffs = tanh_over_x_power_coeffs(n)?;
    let value = weighted_sum(&zeta_coeffs, ctx, |k, c| riemann_zeta(&c.real(2 * k + 1), c), |k| 2 * k)?;
    Ok(PowerIntegral { n, value, zeta_coeffs })
}

//! Summation of infinite series to a target accuracy.

use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::hiprec::PrecisionContext;

/// How the tail of a series behaves, which selects the summation method.
#[derive(Clone, Debug, PartialEq)]
pub enum SeriesClass {
    /// Terms eventually decay geometrically; summed until the geometric tail
    /// bound |a_k| r/(1-r) drops below the target.
    Geometric,
    /// Σ (-1)^k b_k with b_k completely monotone; Cohen-Villegas-Zagier acceleration.
    Alternating,
    /// Tail R_K = K^{-τ} (c_0 + c_1/K + c_2/K² + ...); the limit is extrapolated
    /// from partial sums. With `even_only` the expansion may differ between even
    /// and odd K (an alternating component) and only even K are used.
    Algebraic { tail_exponent: f64, even_only: bool },
}

#[derive(Clone, Debug)]
pub struct SeriesResult {
    pub value: Float,
    pub est_error: Float,
    pub terms_used: u64,
}

/// Σ_{k ≥ start} term(k).
pub fn sum_series(
    term: &dyn Fn(u64) -> Result<Float>,
    start: u64,
    class: &SeriesClass,
    ctx: &PrecisionContext,
    target: Option<&Float>,
) -> Result<SeriesResult> {
    let target = target.cloned().unwrap_or_else(|| ctx.target());
    match class {
        SeriesClass::Geometric => geometric(term, start, ctx, &target),
        SeriesClass::Alternating => alternating(term, start, ctx),
        SeriesClass::Algebraic { tail_exponent, even_only } => {
            let plan = ExtrapolationPlan::for_precision(ctx);
            let kmax = plan.max_index();
            let p = ctx.prec() + 64;
            let mut partial = Vec::with_capacity(kmax as usize + 1);
            let mut acc = Float::with_val(p, 0);
            partial.push(acc.clone());
            for k in 0..kmax {
                acc += term(start + k)?;
                partial.push(acc.clone());
            }
            let r = extrapolate_partial_sums(&partial, *tail_exponent, *even_only, ctx)?;
            Ok(SeriesResult {
                terms_used: kmax,
                ..r
            })
        }
    }
}

fn geometric(term: &dyn Fn(u64) -> Result<Float>, start: u64, ctx: &PrecisionContext, target: &Float) -> Result<SeriesResult> {
    let p = ctx.prec() + 16;
    let eps = Float::with_val(p, 1) >> p as i32;
    let mut acc = Float::with_val(p, 0);
    let mut prev: Option<Float> = None;
    let mut k = start;
    let mut n = 0u64;
    loop {
        let t = Float::with_val(p, term(k)?);
        let at = Float::with_val(p, t.abs_ref());
        acc += &t;
        n += 1;
        if let Some(pa) = &prev {
            if !pa.is_zero() && at < *pa {
                let r = Float::with_val(p, &at / pa);
                let bound = Float::with_val(p, &at * &r) / Float::with_val(p, 1u32 - &r);
                let floor = Float::with_val(p, acc.abs_ref()) * &eps;
                if bound <= Float::with_val(p, target / 16u32) || bound <= floor {
                    let err = bound.max(&floor);
                    return Ok(SeriesResult {
                        value: Float::with_val(ctx.prec(), acc),
                        est_error: Float::with_val(ctx.prec(), err),
                        terms_used: n,
                    });
                }
            }
            if at.is_zero() && pa.is_zero() {
                return Ok(SeriesResult {
                    value: Float::with_val(ctx.prec(), acc),
                    est_error: ctx.real(0),
                    terms_used: n,
                });
            }
        }
        if n > 50_000_000 {
            return Err(Error::NoConvergence("geometric series did not settle".into()));
        }
        prev = Some(at);
        k += 1;
    }
}

// Cohen, Rodriguez Villegas and Zagier, Algorithm 1.
fn alternating(term: &dyn Fn(u64) -> Result<Float>, start: u64, ctx: &PrecisionContext) -> Result<SeriesResult> {
    let p = ctx.prec() + 32;
    let n = (ctx.prec() as f64 * std::f64::consts::LN_2 / (3.0 + 8f64.sqrt()).ln()).ceil() as u64 + 4;
    let root8 = Float::with_val(p, 8u32).sqrt();
    let mut d = Float::with_val(p, &root8 + 3u32);
    d = d.pow(n as u32);
    d = (Float::with_val(p, d.recip_ref()) + &d) / 2u32;
    let mut b = Float::with_val(p, -1);
    let mut c = Float::with_val(p, -&d);
    let mut s = Float::with_val(p, 0);
    let mut bmax = Float::with_val(p, 0);
    for k in 0..n {
        let mut a = Float::with_val(p, term(start + k)?);
        if k % 2 == 1 {
            a = -a;
        }
        bmax = bmax.max(&Float::with_val(p, a.abs_ref()));
        c = Float::with_val(p, &b - &c);
        s += Float::with_val(p, &c * &a);
        let kk = k as i64;
        let nn = n as i64;
        b *= Float::with_val(p, (kk + nn) * (kk - nn));
        b /= Float::with_val(p, (2 * kk + 1) * (kk + 1));
        b *= 2u32;
    }
    let value = s / &d;
    let err = bmax * 2u32 / d;
    Ok(SeriesResult {
        value: Float::with_val(ctx.prec(), value),
        est_error: Float::with_val(ctx.prec(), err),
        terms_used: n,
    })
}

/// Sample layout for the extrapolation: `unknowns` coefficients fitted from
/// partial sums at K = k0, k0 + step, ... (two layouts give the error estimate).
#[derive(Clone, Copy, Debug)]
pub struct ExtrapolationPlan {
    pub unknowns: usize,
    pub k0: u64,
    pub step: u64,
}

impl ExtrapolationPlan {
    pub fn for_precision(ctx: &PrecisionContext) -> Self {
        let unknowns = (ctx.prec() as usize / 7).clamp(12, 48);
        let k0 = 12 * unknowns as u64;
        ExtrapolationPlan {
            unknowns,
            k0,
            step: 2 * (k0 / unknowns as u64 / 2).max(1),
        }
    }

    fn layouts(&self) -> [(u64, u64); 2] {
        [(self.k0, self.step), (self.k0 * 3 / 2 / 2 * 2, self.step + 2)]
    }

    /// Largest partial-sum index needed.
    pub fn max_index(&self) -> u64 {
        self.layouts()
            .iter()
            .map(|&(k0, st)| k0 + st * self.unknowns as u64)
            .max()
            .unwrap()
            + 1
    }
}

/// Limit of partial sums P_K (`partial[K]` = sum of the first K terms) whose
/// remainder behaves like K^{-τ} times a power series in 1/K.
pub fn extrapolate_partial_sums(partial: &[Float], tail_exponent: f64, even_only: bool, ctx: &PrecisionContext) -> Result<SeriesResult> {
    let plan = ExtrapolationPlan::for_precision(ctx);
    if (partial.len() as u64) < plan.max_index() {
        return Err(Error::NoConvergence(format!(
            "extrapolation needs {} partial sums, got {}",
            plan.max_index(),
            partial.len()
        )));
    }
    let p = ctx.prec() + 64 + 4 * plan.unknowns as u32;
    let tau = Float::with_val(p, tail_exponent);
    let mut fits = Vec::new();
    for (k0, step) in plan.layouts() {
        let k0 = if even_only { k0 + k0 % 2 } else { k0 };
        let step = if even_only { step + step % 2 } else { step };
        let n = plan.unknowns;
        // unknowns: limit S and c_0..c_{n-1}; rows S - Σ_j c_j K^{-τ-j} = P_K
        let mut m: Vec<Vec<Float>> = Vec::with_capacity(n + 1);
        let mut rhs: Vec<Float> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let k = k0 + step * i as u64;
            let kf = Float::with_val(p, k);
            let inv = Float::with_val(p, kf.recip_ref());
            let mut row = Vec::with_capacity(n + 1);
            row.push(Float::with_val(p, 1));
            let mut x = (-(Float::with_val(p, kf.ln_ref()) * &tau)).exp();
            for _ in 0..n {
                row.push(Float::with_val(p, -&x));
                x *= &inv;
            }
            m.push(row);
            rhs.push(Float::with_val(p, &partial[k as usize]));
        }
        fits.push(solve_first(m, rhs)?);
    }
    let err = Float::with_val(ctx.prec(), &fits[0] - &fits[1]).abs();
    Ok(SeriesResult {
        value: Float::with_val(ctx.prec(), &fits[1]),
        est_error: err,
        terms_used: plan.max_index(),
    })
}

// Gaussian elimination with partial pivoting; returns the first unknown.
fn solve_first(mut m: Vec<Vec<Float>>, mut rhs: Vec<Float>) -> Result<Float> {
    let n = rhs.len();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&a, &b| m[a][col].clone().abs().partial_cmp(&m[b][col].clone().abs()).unwrap())
            .unwrap();
        if m[piv][col].is_zero() {
            return Err(Error::NoConvergence("singular extrapolation system".into()));
        }
        m.swap(col, piv);
        rhs.swap(col, piv);
        for r in col + 1..n {
            let f = Float::with_val(m[r][col].prec(), &m[r][col] / &m[col][col]);
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let t = Float::with_val(f.prec(), &f * &m[col][c]);
                m[r][c] -= t;
            }
            let t = Float::with_val(f.prec(), &f * &rhs[col]);
            rhs[r] -= t;
        }
    }
    let mut x = vec![Float::new(rhs[0].prec()); n];
    for r in (0..n).rev() {
        let mut s = rhs[r].clone();
        for c in r + 1..n {
            s -= Float::with_val(s.prec(), &m[r][c] * &x[c]);
        }
        x[r] = s / &m[r][r];
    }
    Ok(x.swap_remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(128).unwrap()
    }

    fn diff(a: &Float, b: &Float) -> f64 {
        Float::with_val(a.prec(), a - b).abs().to_f64()
    }

    #[test]
    fn basel_by_extrapolation() {
        let c = ctx();
        let p = c.prec();
        let t = |k: u64| Ok(Float::with_val(p, k).square().recip());
        let cls = SeriesClass::Algebraic { tail_exponent: 1.0, even_only: false };
        let r = sum_series(&t, 1, &cls, &c, None).unwrap();
        let e = c.pi().square() / 6u32;
        assert!(diff(&r.value, &e) < 1e-32, "{}", diff(&r.value, &e));
        assert!(r.est_error < 1e-30);
    }

    #[test]
    fn leibniz_accelerated() {
        let c = ctx();
        let p = c.prec();
        let t = |k: u64| {
            let v = Float::with_val(p, 2 * k + 1).recip();
            Ok(if k % 2 == 0 { v } else { -v })
        };
        let r = sum_series(&t, 0, &SeriesClass::Alternating, &c, None).unwrap();
        assert!(diff(&r.value, &(c.pi() / 4u32)) < 1e-40);
        // the same series with an alternating component in the tail expansion
        let cls = SeriesClass::Algebraic { tail_exponent: 1.0, even_only: true };
        let r = sum_series(&t, 0, &cls, &c, None).unwrap();
        assert!(diff(&r.value, &(c.pi() / 4u32)) < 1e-30, "{}", diff(&r.value, &(c.pi() / 4u32)));
    }

    #[test]
    fn coth_series() {
        // Σ coth(πn)/n³ = 7π³/180
        let c = ctx();
        let p = c.prec();
        let pi = c.pi();
        let t = |k: u64| {
            let x = Float::with_val(p, &pi * k);
            Ok(x.tanh().recip() / Float::with_val(p, k).pow(3u32))
        };
        let cls = SeriesClass::Algebraic { tail_exponent: 2.0, even_only: false };
        let r = sum_series(&t, 1, &cls, &c, None).unwrap();
        let e = c.pi().pow(3u32) * 7u32 / 180u32;
        assert!(diff(&r.value, &e) < 1e-30, "{}", diff(&r.value, &e));
    }

    #[test]
    fn geometric_tail() {
        let c = ctx();
        let p = c.prec();
        let t = |k: u64| Ok(Float::with_val(p, 0.5f64).pow(k as u32));
        let r = sum_series(&t, 0, &SeriesClass::Geometric, &c, None).unwrap();
        assert!(diff(&r.value, &c.real(2)) < 1e-32);
    }
}

//! Double-exponential quadrature: exp-sinh on (0, ∞) and tanh-sinh on [a, b],
//! trapezoidal sums with level doubling.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use rug::float::Constant;
use rug::Float;

use crate::error::{Error, Result};
use crate::hiprec::PrecisionContext;

/// Outcome of one quadrature.
#[derive(Clone, Debug)]
pub struct QuadratureResult {
    pub value: Float,
    /// Difference between the last two levels (the previous level's error).
    pub est_error: Float,
    pub nodes_used: usize,
    pub level: u32,
}

pub const MAX_LEVEL: u32 = 12;
const MIN_LEVEL: u32 = 3;
const BLOCK: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Rule {
    ExpSinh,
    TanhSinh,
}

// One abscissa. For tanh-sinh `x` holds the distance to the nearer endpoint.
struct Node {
    x: Float,
    w: Float,
}

// Nodes introduced at one level, ordered by increasing |t|; `pos` for t > 0.
struct LevelNodes {
    pos: Vec<Node>,
    neg: Vec<Node>,
}

type NodeKey = (Rule, u32, u32);

fn node_cache() -> &'static Mutex<HashMap<NodeKey, Arc<LevelNodes>>> {
    static C: OnceLock<Mutex<HashMap<NodeKey, Arc<LevelNodes>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

fn t_max(rule: Rule, prec: u32) -> f64 {
    let b = (prec + 12) as f64 * std::f64::consts::LN_2;
    match rule {
        Rule::ExpSinh => (2.0 * b / std::f64::consts::PI).asinh() + 0.25,
        Rule::TanhSinh => (b / std::f64::consts::PI).asinh() + 0.25,
    }
}

fn level_nodes(rule: Rule, prec: u32, level: u32) -> Arc<LevelNodes> {
    let key = (rule, prec, level);
    if let Some(v) = node_cache().lock().unwrap().get(&key) {
        return v.clone();
    }
    let tm = t_max(rule, prec);
    let steps = 1u64 << level;
    // level 0: t = 0, ±1, ±2, ...; level ℓ: odd multiples of 2^-ℓ
    let ks: Vec<u64> = if level == 0 {
        (0..=(tm.ceil() as u64)).collect()
    } else {
        (0..)
            .map(|i| 2 * i + 1)
            .take_while(|&k| (k as f64) / (steps as f64) <= tm)
            .collect()
    };
    let half_pi = Float::with_val(prec, Constant::Pi) / 2u32;
    let build = |k: u64, sign: i32| -> Option<Node> {
        if k == 0 && sign < 0 {
            return None;
        }
        let t = Float::with_val(prec, k) / Float::with_val(prec, steps) * sign;
        let (sh, ch) = t.sinh_cosh(Float::new(prec));
        let u = Float::with_val(prec, &half_pi * &sh);
        let du = Float::with_val(prec, &half_pi * &ch);
        match rule {
            Rule::ExpSinh => {
                let x = u.exp();
                let w = Float::with_val(prec, &du * &x);
                Some(Node { x, w })
            }
            Rule::TanhSinh => {
                // distance to the nearer endpoint on [-1, 1]: 2 / (1 + e^{2|u|})
                let e = Float::with_val(prec, u.abs_ref()) * 2u32;
                let e = e.exp();
                let delta = Float::with_val(prec, 2u32) / (Float::with_val(prec, &e + 1u32));
                // weight: du / cosh²u = du · 4 e^{2|u|} / (1 + e^{2|u|})²
                let den = Float::with_val(prec, &e + 1u32).square();
                let w = du * e * 4u32 / den;
                Some(Node { x: delta, w })
            }
        }
    };
    let pos: Vec<Node> = ks.par_iter().filter_map(|&k| build(k, 1)).collect();
    let neg: Vec<Node> = ks.par_iter().filter_map(|&k| build(k, -1)).collect();
    let v = Arc::new(LevelNodes { pos, neg });
    node_cache().lock().unwrap().insert(key, v.clone());
    v
}

// Sum of w·f over one side, evaluated outward in parallel blocks and cut once
// a run of terms is negligible against `scale`.
type MapFn<'a> = &'a (dyn Fn(&Float) -> Float + Sync);
type Integrand<'a> = &'a (dyn Fn(&Float) -> Result<Float> + Sync);

fn side_sum(nodes: &[Node], map: MapFn, f: Integrand, prec: u32, scale: &Float) -> Result<(Float, usize)> {
    let mut acc = Float::with_val(prec, 0);
    let mut used = 0usize;
    let mut quiet = 0usize;
    let tiny = Float::with_val(prec, scale) >> (prec as i32 + 8);
    for block in nodes.chunks(BLOCK) {
        let vals: Vec<Result<Float>> = block
            .par_iter()
            .map(|n| {
                let x = map(&n.x);
                if x.is_zero() || !x.is_finite() {
                    return Ok(Float::with_val(prec, 0));
                }
                let fx = f(&x)?;
                if !fx.is_finite() {
                    return Err(Error::NoConvergence(format!(
                        "integrand not finite at x = {}",
                        x.to_f64()
                    )));
                }
                Ok(Float::with_val(prec, &fx * &n.w))
            })
            .collect();
        for v in vals {
            let v = v?;
            used += 1;
            if Float::with_val(prec, v.abs_ref()) <= tiny {
                quiet += 1;
            } else {
                quiet = 0;
            }
            acc += v;
        }
        if quiet >= 6 {
            break;
        }
    }
    Ok((acc, used))
}

fn run(
    rule: Rule,
    map_pos: MapFn,
    map_neg: MapFn,
    scale_w: &Float,
    f: Integrand,
    ctx: &PrecisionContext,
    target: Option<&Float>,
) -> Result<QuadratureResult> {
    let prec = ctx.prec() + 16;
    let target = target.cloned().unwrap_or_else(|| ctx.target());
    let floor_rel = Float::with_val(prec, 1) >> (ctx.prec() as i32 - 8);
    let mut total = Float::with_val(prec, 0);
    let mut prev: Option<Float> = None;
    let mut nodes = 0usize;
    let mut last_err = Float::with_val(prec, f64::INFINITY);
    for level in 0..=MAX_LEVEL {
        let ln = level_nodes(rule, prec, level);
        let scale = match &prev {
            Some(p) => Float::with_val(prec, p.abs_ref()).max(&Float::with_val(prec, 1e-300)),
            None => Float::with_val(prec, 1e-300),
        };
        let (sp, up) = side_sum(&ln.pos, map_pos, f, prec, &scale)?;
        let (sn, un) = side_sum(&ln.neg, map_neg, f, prec, &scale)?;
        nodes += up + un;
        let h = Float::with_val(prec, 1) >> level as i32;
        let new = Float::with_val(prec, &sp + &sn) * &h * scale_w;
        total = if level == 0 { new } else { Float::with_val(prec, &total / 2u32) + new };
        if let Some(p) = &prev {
            last_err = Float::with_val(prec, &total - p).abs();
            let floor = Float::with_val(prec, total.abs_ref()) * &floor_rel;
            if level >= MIN_LEVEL && (last_err <= target || last_err <= floor) {
                return Ok(QuadratureResult {
                    value: Float::with_val(ctx.prec(), &total),
                    est_error: Float::with_val(ctx.prec(), &last_err),
                    nodes_used: nodes,
                    level,
                });
            }
        }
        prev = Some(total.clone());
    }
    Err(Error::NoConvergence(format!(
        "quadrature stalled at level {MAX_LEVEL} with error estimate {:.3e}",
        last_err.to_f64()
    )))
}

/// ∫₀^∞ f(x) dx for f integrable at 0 and decaying at least like x^-2 at ∞.
pub fn integrate_semi_infinite(
    f: Integrand,
    ctx: &PrecisionContext,
    target: Option<&Float>,
) -> Result<QuadratureResult> {
    let prec = ctx.prec() + 16;
    let pos = |x: &Float| Float::with_val(prec, x);
    run(Rule::ExpSinh, &pos, &pos, &Float::with_val(prec, 1), f, ctx, target)
}

/// ∫_a^b f(x) dx for f integrable on [a, b] (endpoint singularities allowed).
pub fn integrate_finite(
    f: &(dyn Fn(&Float) -> Result<Float> + Sync),
    a: &Float,
    b: &Float,
    ctx: &PrecisionContext,
    target: Option<&Float>,
) -> Result<QuadratureResult> {
    let prec = ctx.prec() + 16;
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain("integrate_finite needs finite limits".into()));
    }
    if a == b {
        return Ok(QuadratureResult {
            value: ctx.real(0),
            est_error: ctx.real(0),
            nodes_used: 0,
            level: 0,
        });
    }
    let d = Float::with_val(prec, b - a) / 2u32;
    let a2 = Float::with_val(prec, a);
    let b2 = Float::with_val(prec, b);
    let dd = d.clone();
    let pos = move |delta: &Float| Float::with_val(prec, &b2 - Float::with_val(prec, delta * &dd));
    let dd = d.clone();
    let neg = move |delta: &Float| Float::with_val(prec, &a2 + Float::with_val(prec, delta * &dd));
    run(Rule::TanhSinh, &pos, &neg, &d, f, ctx, target)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(128).unwrap()
    }

    #[test]
    fn exp_decay() {
        let c = ctx();
        // ∫ e^{-x} = 1
        let r = integrate_semi_infinite(&|x: &Float| Ok((-x.clone()).exp()), &c, None).unwrap();
        assert!(Float::with_val(c.prec(), &r.value - 1u32).abs() < 1e-32, "{}", r.value);
        assert!(r.est_error < 1e-31);
    }

    #[test]
    fn sech_and_algebraic() {
        let c = ctx();
        // ∫ sech = π/2
        let r = integrate_semi_infinite(&|x: &Float| Ok(x.clone().sech()), &c, None).unwrap();
        assert!(Float::with_val(c.prec(), &r.value - c.pi() / 2u32).abs() < 1e-32);
        // ∫ 1/(1+x²) = π/2
        let r = integrate_semi_infinite(&|x: &Float| Ok((x.clone().square() + 1u32).recip()), &c, None).unwrap();
        assert!(Float::with_val(c.prec(), &r.value - c.pi() / 2u32).abs() < 1e-32);
        // ∫ (tanh x / x)² = 14 ζ(3)/π²
        let r = integrate_semi_infinite(&|x: &Float| Ok((x.clone().tanh() / x).square()), &c, None).unwrap();
        let z3 = Float::with_val(c.prec(), 3u32).zeta();
        let e = z3 * 14u32 / c.pi().square();
        assert!(Float::with_val(c.prec(), &r.value - &e).abs() < 1e-32, "{} vs {}", r.value, e);
    }

    #[test]
    fn log_endpoint_singularity() {
        let c = ctx();
        // ∫ log(x) e^{-x} = -γ
        let r = integrate_semi_infinite(&|x: &Float| Ok(x.clone().ln() * (-x.clone()).exp()), &c, None).unwrap();
        assert!(Float::with_val(c.prec(), &r.value + c.euler_gamma()).abs() < 1e-32);
    }

    #[test]
    fn finite_interval() {
        let c = ctx();
        // ∫_0^1 log x = -1, ∫_1^3 x² = 26/3
        let r = integrate_finite(&|x: &Float| Ok(x.clone().ln()), &c.real(0), &c.real(1), &c, None).unwrap();
        assert!(Float::with_val(c.prec(), &r.value + 1u32).abs() < 1e-32);
        let r = integrate_finite(&|x: &Float| Ok(x.clone().square()), &c.real(1), &c.real(3), &c, None).unwrap();
        assert!(Float::with_val(c.prec(), &r.value - Float::with_val(c.prec(), 26u32) / 3u32).abs() < 1e-32);
    }

    #[test]
    fn doubling_does_not_exceed_estimate() {
        let c = ctx();
        let f = |x: &Float| Ok(x.clone().tanh() / x * x.clone().sech() * (-x.clone() * 1.5f64).exp());
        let r = integrate_semi_infinite(&f, &c, None).unwrap();
        let tight = c.real(1) >> 150;
        let r2 = integrate_semi_infinite(&f, &c.raised(32), Some(&tight)).unwrap();
        let diff = Float::with_val(c.prec(), &r.value - &r2.value).abs();
        assert!(diff <= r.est_error.clone().max(&(c.real(1) >> 140)), "{diff} > {}", r.est_error);
    }
}

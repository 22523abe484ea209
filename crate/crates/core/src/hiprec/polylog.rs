//! Polylogarithm Li_s(x) for real order s and 0 < x < 1.
//!
//! Away from x = 1 the defining series is summed directly; for -log x < 1/8
//! the expansion in w = -log x around the branch point is used:
//!
//! ```text
//! Li_s(e^{-w}) = Γ(1-s) w^{s-1} + Σ_k ζ(s-k) (-w)^k / k!                  (s ∉ ℕ)
//! Li_n(e^{-w}) = (-w)^{n-1}/(n-1)! (H_{n-1} - log w) + Σ_{k≠n-1} ζ(n-k) (-w)^k / k!
//! ```

use std::sync::RwLock;

use rug::ops::Pow;
use rug::Float;

use super::context::{finite, PrecisionContext};
use super::gamma::gamma_real;
use super::zeta::riemann_zeta;
use crate::error::{Error, Result};
use crate::exact::{factorial, harmonic};

/// Below this value of w = -log x the branch-point expansion is used.
pub const SWITCH_W: f64 = 0.125;

/// Li_s evaluator for a fixed order, caching k^{-s} and ζ(s-k)/k!.
pub struct Polylog {
    s: Float,
    ctx: PrecisionContext,
    integer_order: Option<u32>,
    powers: Vec<Float>,
    singular: Option<Float>,
    harmonic: Float,
    coeffs: RwLock<Vec<Float>>,
}

impl Polylog {
    pub fn new(s: &Float, ctx: &PrecisionContext) -> Result<Self> {
        if !s.is_finite() {
            return Err(Error::Domain("polylog order must be finite".into()));
        }
        let c = ctx.raised(16);
        let p = c.prec();
        let s = Float::with_val(p, s);
        let integer_order = if s.is_integer() && s >= 1 { s.to_u32_saturating() } else { None };
        let kmax = (p as f64 * std::f64::consts::LN_2 / SWITCH_W).ceil() as usize + 2;
        let mut powers = Vec::with_capacity(kmax + 1);
        powers.push(Float::with_val(p, 0));
        for k in 1..=kmax {
            let l = Float::with_val(p, k as u32).ln() * &s;
            powers.push((-l).exp());
        }
        let singular = match integer_order {
            Some(_) => None,
            None => Some(gamma_real(&Float::with_val(p, 1u32 - &s), &c)?),
        };
        let harmonic = match integer_order {
            Some(n) => Float::with_val(p, &harmonic(n - 1)),
            None => Float::new(p),
        };
        Ok(Polylog {
            s,
            ctx: c,
            integer_order,
            powers,
            singular,
            harmonic,
            coeffs: RwLock::new(Vec::new()),
        })
    }

    pub fn order(&self) -> &Float {
        &self.s
    }

    /// Li_s(e^{-w}) for w > 0; w is clamped to at least 2^-bits.
    pub fn eval_neg_log(&self, w: &Float) -> Result<Float> {
        let p = self.ctx.prec();
        let floor = Float::with_val(p, 1) >> self.ctx.bits as i32;
        let w = if *w < floor { floor } else { Float::with_val(p, w) };
        let v = if w < SWITCH_W { self.expansion(&w)? } else { self.series(&w)? };
        finite(v, "polylog")
    }

    /// Direct series Σ e^{-kw} k^{-s}.
    pub fn series(&self, w: &Float) -> Result<Float> {
        let p = self.ctx.prec();
        if *w <= 0 {
            return Err(Error::Domain("polylog series needs w > 0".into()));
        }
        let q = Float::with_val(p, -w).exp();
        let eps = Float::with_val(p, 1) >> p as i32;
        let mut qk = q.clone();
        let mut sum = Float::with_val(p, 0);
        let mut k = 1usize;
        loop {
            let term = if k < self.powers.len() {
                Float::with_val(p, &qk * &self.powers[k])
            } else {
                let l = Float::with_val(p, k as u32).ln() * &self.s;
                (-l).exp() * &qk
            };
            sum += &term;
            if qk <= Float::with_val(p, sum.abs_ref()) * &eps {
                break;
            }
            if k > 1 << 24 {
                return Err(Error::NoConvergence("polylog series".into()));
            }
            qk *= &q;
            k += 1;
        }
        Ok(sum)
    }

    fn coeff(&self, k: usize) -> Result<Float> {
        if let Some(c) = self.coeffs.read().unwrap().get(k) {
            return Ok(c.clone());
        }
        let mut guard = self.coeffs.write().unwrap();
        let p = self.ctx.prec();
        while guard.len() <= k {
            let j = guard.len();
            let c = if self.integer_order == Some(j as u32 + 1) {
                Float::with_val(p, 0)
            } else {
                let arg = Float::with_val(p, &self.s - j as u32);
                riemann_zeta(&arg, &self.ctx)? / Float::with_val(p, &factorial(j as u32))
            };
            guard.push(c);
        }
        Ok(guard[k].clone())
    }

    /// Expansion around x = 1, convergent for 0 < w < 2π.
    pub fn expansion(&self, w: &Float) -> Result<Float> {
        let p = self.ctx.prec();
        if *w <= 0 || *w >= 6.0 {
            return Err(Error::Domain("polylog expansion needs 0 < w < 6".into()));
        }
        let lw = Float::with_val(p, w.ln_ref());
        let mut sum = match (&self.singular, self.integer_order) {
            (Some(g), _) => {
                let e = Float::with_val(p, &self.s - 1u32) * &lw;
                e.exp() * g
            }
            (None, Some(n)) => {
                let mw = Float::with_val(p, -w);
                let pw = if n == 1 { Float::with_val(p, 1) } else { mw.pow(n - 1) };
                let f = Float::with_val(p, &factorial(n - 1));
                pw / f * Float::with_val(p, &self.harmonic - &lw)
            }
            _ => unreachable!(),
        };
        let eps = Float::with_val(p, 1) >> p as i32;
        let mw = Float::with_val(p, -w);
        let mut pw = Float::with_val(p, 1);
        let sf = self.s.to_f64();
        let mut quiet = 0;
        let mut k = 0usize;
        loop {
            let term = self.coeff(k)? * &pw;
            let small = term.clone().abs() <= Float::with_val(p, sum.abs_ref()) * &eps;
            sum += term;
            quiet = if small { quiet + 1 } else { 0 };
            if quiet >= 2 && k as f64 > sf + 2.0 {
                break;
            }
            if k > 8 * p as usize {
                return Err(Error::NoConvergence("polylog expansion".into()));
            }
            pw *= &mw;
            k += 1;
        }
        Ok(sum)
    }
}

/// Li_s(x) for 0 < x < 1, and x = 1 when s > 1.
pub fn polylog(s: &Float, x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    if !x.is_finite() || *x <= 0 || *x > 1 {
        return Err(Error::Domain("polylog needs 0 < x <= 1".into()));
    }
    if *x == 1 {
        if *s > 1 {
            return riemann_zeta(s, ctx);
        }
        return Err(Error::Pole("polylog at x = 1 with s <= 1".into()));
    }
    let li = Polylog::new(s, ctx)?;
    let w = -Float::with_val(ctx.prec() + 16, x.ln_ref());
    Ok(Float::with_val(ctx.prec(), li.eval_neg_log(&w)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(128).unwrap()
    }

    fn close(a: &Float, b: &Float, tol: f64) -> bool {
        Float::with_val(a.prec(), a - b).abs() <= tol * (1.0 + b.to_f64().abs())
    }

    #[test]
    fn li1_is_log() {
        let c = ctx();
        let v = polylog(&c.real(1), &c.real(0.5), &c).unwrap();
        assert!(close(&v, &c.ln2(), 1e-40));
        // near one: Li_1(x) = -log(1-x)
        let x = c.real(1) - (c.real(1) >> 20);
        let v = polylog(&c.real(1), &x, &c).unwrap();
        let e = -(c.real(1) - x).ln();
        assert!(close(&v, &e, 1e-40));
    }

    #[test]
    fn li2_values() {
        let c = ctx();
        let pi2 = c.pi().square();
        // Li_2(1/2) = π²/12 - log²2/2
        let v = polylog(&c.real(2), &c.real(0.5), &c).unwrap();
        let e = pi2.clone() / 12u32 - c.ln2().square() / 2u32;
        assert!(close(&v, &e, 1e-40));
        let x = c.real(1) - c.real(1e-6);
        let v = polylog(&c.real(2), &x, &c).unwrap();
        assert!((v.to_f64() - pi2.to_f64() / 6.0).abs() < 1e-4);
        // Li_s(1) = ζ(s)
        let v = polylog(&c.real(2), &c.real(1), &c).unwrap();
        assert!(close(&v, &(pi2 / 6u32), 1e-40));
    }

    #[test]
    fn series_and_expansion_agree() {
        let c = ctx();
        for s in [1.5, 2.0, 3.0, 2.75, 0.5, 4.25] {
            let li = Polylog::new(&c.real(s), &c).unwrap();
            for w in [0.2, 0.5, 1.0, 2.0] {
                let a = li.series(&c.real(w)).unwrap();
                let b = li.expansion(&c.real(w)).unwrap();
                assert!(close(&a, &b, 1e-40), "s={s} w={w}: {a} vs {b}");
            }
        }
    }

    // Oracle: Li_3 inversion-free identity Li_s(x) + Li_s(-x) = 2^{1-s} Li_s(x²),
    // with Li_s(-x) summed directly as an alternating series.
    #[test]
    fn duplication_relation() {
        let c = ctx();
        let p = c.prec();
        for s in [2.5, 3.0] {
            let x = c.real(0.97);
            let lhs_pos = polylog(&c.real(s), &x, &c).unwrap();
            let mut neg = Float::with_val(p, 0);
            let mut xk = Float::with_val(p, 1);
            for k in 1..20000u32 {
                xk *= &x;
                let t = Float::with_val(p, &xk) / Float::with_val(p, k).pow(Float::with_val(p, s));
                if k % 2 == 1 {
                    neg -= t;
                } else {
                    neg += t;
                }
            }
            let x2 = Float::with_val(p, x.square_ref());
            let rhs = polylog(&c.real(s), &x2, &c).unwrap() * Float::with_val(p, 2u32).pow(Float::with_val(p, 1.0 - s));
            assert!(close(&(lhs_pos + neg), &rhs, 1e-38), "s={s}");
        }
    }

    #[test]
    fn domain() {
        let c = ctx();
        assert!(polylog(&c.real(2), &c.real(1.5), &c).is_err());
        assert!(polylog(&c.real(1), &c.real(1), &c).is_err());
    }
}

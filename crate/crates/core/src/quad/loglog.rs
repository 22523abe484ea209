//! ∫₁^∞ W(x) log(log x) dx integrals, computed as ∫₀^∞ W(e^t) e^t log t dt.

use rug::ops::Pow;
use rug::Float;

use super::de::{integrate_semi_infinite, QuadratureResult};
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial};
use crate::hiprec::PrecisionContext;
use rug::Integer;

/// Which constant the weight represents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LogLogKind {
    /// β(2N) weights, N ≥ 1.
    Beta,
    /// ζ(2N+1) weights, N ≥ 1.
    Zeta,
}

/// Weight W_N(x) for β(2N) or ζ(2N+1).
///
/// β: Σ_{k=0}^{N-1} a_k ((2k+1)x⁴ - 2(2k+3)x² + 2k+1) x^{2k} / (x²+1)^{2k+3},
///    a_k = Σ_{j=0}^{k} C(2k+1, k-j) (-1)^{j+1} (2j+1)^{2N-1}.
/// ζ: Σ_{k=1}^{N} b_k (2k x⁴ - 2(2k+2)x² + 2k) x^{2k-1} / (x²+1)^{2k+2},
///    b_k = Σ_{j=1}^{k} C(2k, k-j) (-1)^j (2j)^{2N}.
pub fn loglog_weight(kind: LogLogKind, n: u32, x: &Float, prec: u32) -> Float {
    let x2 = Float::with_val(prec, x.square_ref());
    let x4 = Float::with_val(prec, x2.square_ref());
    let q = Float::with_val(prec, &x2 + 1u32);
    let mut acc = Float::with_val(prec, 0);
    match kind {
        LogLogKind::Beta => {
            for k in 0..n {
                let mut a = Integer::new();
                for j in 0..=k {
                    let t = binomial(2 * k + 1, k - j) * Integer::from(2 * j + 1).pow(2 * n - 1);
                    if j % 2 == 0 {
                        a -= t;
                    } else {
                        a += t;
                    }
                }
                let c = 2 * k + 1;
                let poly = Float::with_val(prec, &x4 * c) - Float::with_val(prec, &x2 * (2 * (2 * k + 3))) + c;
                let num = poly * Float::with_val(prec, x.pow(2 * k));
                let den = Float::with_val(prec, (&q).pow(2 * k + 3));
                acc += num / den * Float::with_val(prec, &a);
            }
        }
        LogLogKind::Zeta => {
            for k in 1..=n {
                let mut b = Integer::new();
                for j in 1..=k {
                    let t = binomial(2 * k, k - j) * Integer::from(2 * j).pow(2 * n);
                    if j % 2 == 1 {
                        b -= t;
                    } else {
                        b += t;
                    }
                }
                let c = 2 * k;
                let poly = Float::with_val(prec, &x4 * c) - Float::with_val(prec, &x2 * (2 * (2 * k + 2))) + c;
                let num = poly * Float::with_val(prec, x.pow(2 * k - 1));
                let den = Float::with_val(prec, (&q).pow(2 * k + 2));
                acc += num / den * Float::with_val(prec, &b);
            }
        }
    }
    acc
}

/// Prefactor P with β(2N) (resp. ζ(2N+1)) = P ∫₁^∞ W_N(x) log(log x) dx.
pub fn loglog_prefactor(kind: LogLogKind, n: u32, ctx: &PrecisionContext) -> Float {
    let p = ctx.prec();
    let pi = ctx.pi();
    let sign = if n % 2 == 0 { 1 } else { -1 };
    match kind {
        LogLogKind::Beta => {
            let num = pi.pow(2 * n - 1);
            let den = Float::with_val(p, &factorial(2 * n - 1)) * Float::with_val(p, 2u32).pow(2 * n - 1);
            num / den * sign
        }
        LogLogKind::Zeta => {
            let num = pi.pow(2 * n) * 2u32;
            let two = Float::with_val(p, 2u32).pow(2 * n + 1) - 1u32;
            let den = Float::with_val(p, &factorial(2 * n)) * two;
            num / den * sign
        }
    }
}

/// ∫₁^∞ W(x) log(log x) dx for an arbitrary weight W.
pub fn integrate_loglog_weight(
    weight: &(dyn Fn(&Float) -> Float + Sync),
    ctx: &PrecisionContext,
    target: Option<&Float>,
) -> Result<QuadratureResult> {
    let p = ctx.prec() + 16;
    // the weights decay at least like 1/x, so beyond t = 2p the integrand is below 2^-2p
    let cutoff = 2 * p;
    let f = |t: &Float| -> Result<Float> {
        if *t > cutoff {
            return Ok(Float::with_val(p, 0));
        }
        let x = Float::with_val(p, t.exp_ref());
        let w = weight(&x);
        Ok(w * x * Float::with_val(p, t.ln_ref()))
    };
    integrate_semi_infinite(&f, ctx, target)
}

/// ∫₁^∞ W_N(x) log(log x) dx for the β(2N) or ζ(2N+1) weight.
pub fn integrate_loglog(kind: LogLogKind, n: u32, ctx: &PrecisionContext) -> Result<QuadratureResult> {
    if n == 0 {
        return Err(Error::UnsupportedParameter("loglog weights need N >= 1".into()));
    }
    let p = ctx.prec() + 16;
    integrate_loglog_weight(&|x: &Float| loglog_weight(kind, n, x, p), ctx, None)
}

/// Weight of ∫ tanh(x)/x sech^L(x) dx = 2^L ∫₁^∞ (Lx⁴ - 2(L+2)x² + L) x^{L-1} / (x²+1)^{L+2} log(log x) dx.
pub fn sech_loglog_weight(l: &Float, x: &Float, prec: u32) -> Float {
    let x2 = Float::with_val(prec, x.square_ref());
    let x4 = Float::with_val(prec, x2.square_ref());
    let poly = Float::with_val(prec, &x4 * l) - Float::with_val(prec, &x2 * Float::with_val(prec, l + 2u32)) * 2u32 + l;
    let lx = Float::with_val(prec, x.ln_ref());
    let pw = (Float::with_val(prec, l - 1u32) * &lx).exp();
    let q = (Float::with_val(prec, l + 2u32) * Float::with_val(prec, Float::with_val(prec, &x2 + 1u32).ln())).exp();
    let two_l = (Float::with_val(prec, l * Float::with_val(prec, rug::float::Constant::Log2))).exp();
    poly * pw / q * two_l
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blagouchine_beta2() {
        let c = PrecisionContext::new(128).unwrap();
        let r = integrate_loglog(LogLogKind::Beta, 1, &c).unwrap();
        let b2 = Float::with_val(c.prec(), rug::float::Constant::Catalan);
        // W_1 is the negated Blagouchine integrand, so the integral is -2β(2)/π
        let e = -(b2 * 2u32 / c.pi());
        assert!(Float::with_val(c.prec(), &r.value - &e).abs() < 1e-30, "{} vs {}", r.value, e);
    }

    #[test]
    fn blagouchine_zeta3() {
        let c = PrecisionContext::new(128).unwrap();
        let p = c.prec() + 16;
        let w = |x: &Float| {
            let x2 = Float::with_val(p, x.square_ref());
            let num = (Float::with_val(p, x2.square_ref()) - Float::with_val(p, &x2 * 4u32) + 1u32) * x;
            num / Float::with_val(p, &x2 + 1u32).pow(4u32)
        };
        let r = integrate_loglog_weight(&w, &c, None).unwrap();
        let z3 = Float::with_val(c.prec(), 3u32).zeta();
        let e = z3 * 7u32 / (c.pi().square() * 8u32);
        assert!(Float::with_val(c.prec(), &r.value - &e).abs() < 1e-30);
    }
}

//! The general integral I(N, K, L, T) and its quadrature oracle.

use rug::Float;

use crate::error::{Error, Result};
use crate::hiprec::PrecisionContext;
use crate::quad::{integrate_semi_infinite, QuadratureResult};

/// Parameters of ∫₀^∞ (tanh x / x)^N tanh^K x sech^L x e^{-Tx} dx.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralSpec {
    pub n_exponent: u32,
    pub k: u32,
    pub l: Float,
    pub t: Float,
}

impl IntegralSpec {
    /// Rejects negative or non-finite L, T and the all-zero parameter set.
    pub fn new(n_exponent: u32, k: u32, l: &Float, t: &Float) -> Result<Self> {
        if !l.is_finite() || *l < 0 {
            return Err(Error::Domain(format!("sech power L must be >= 0, got {}", l.to_f64())));
        }
        if !t.is_finite() {
            return Err(Error::Domain("T must be finite".into()));
        }
        if *t < 0 {
            return Err(Error::UnsupportedParameter(format!(
                "T = {} < 0 is outside the supported domain T >= 0",
                t.to_f64()
            )));
        }
        if n_exponent == 0 && k == 0 && l.is_zero() && t.is_zero() {
            return Err(Error::DivergentInput("(N, K, L, T) = (0, 0, 0, 0)".into()));
        }
        Ok(IntegralSpec { n_exponent, k, l: l.clone(), t: t.clone() })
    }

    /// Convenience constructor from f64 parameters at precision `prec`.
    pub fn from_f64(n_exponent: u32, k: u32, l: f64, t: f64, prec: u32) -> Result<Self> {
        Self::new(n_exponent, k, &Float::with_val(prec, l), &Float::with_val(prec, t))
    }

    /// The integrand decays at infinity (it is always bounded at the origin).
    pub fn converges(&self) -> bool {
        self.n_exponent >= 2 || self.l > 0 || self.t > 0
    }

    pub(crate) fn shifted(&self, dn: u32, dk: u32, dl: u32) -> IntegralSpec {
        let p = self.l.prec().max(self.t.prec());
        IntegralSpec {
            n_exponent: self.n_exponent + dn,
            k: self.k + dk,
            l: Float::with_val(p, &self.l + dl),
            t: self.t.clone(),
        }
    }

    /// Integrand value at x > 0, evaluated in log form so large x cannot overflow.
    pub fn integrand(&self, x: &Float, prec: u32) -> Float {
        if x.is_zero() {
            let one = self.k == 0;
            return Float::with_val(prec, if one { 1 } else { 0 });
        }
        let e2 = Float::with_val(prec, Float::with_val(prec, x * -2i32).exp());
        let mut log_v = Float::with_val(prec, -Float::with_val(prec, &self.t * x));
        if self.n_exponent > 0 || self.k > 0 {
            // tanh x = -expm1(-2x) / (2 + expm1(-2x))
            let em = Float::with_val(prec, x * -2i32).exp_m1();
            let num = Float::with_val(prec, -&em).ln();
            let den = Float::with_val(prec, &em + 2u32).ln();
            let log_tanh = num - den;
            if self.n_exponent > 0 {
                let lx = Float::with_val(prec, x.ln_ref());
                log_v += Float::with_val(prec, &log_tanh - lx) * self.n_exponent;
            }
            if self.k > 0 {
                log_v += log_tanh * self.k;
            }
        }
        if !self.l.is_zero() {
            // log sech x = log 2 - x - log1p(e^{-2x})
            let mut ls = Float::with_val(prec, rug::float::Constant::Log2);
            ls -= x;
            ls -= e2.ln_1p();
            log_v += ls * &self.l;
        }
        log_v.exp()
    }

    /// Oracle value of the integral by exp-sinh quadrature.
    pub fn integral(&self, ctx: &PrecisionContext) -> Result<QuadratureResult> {
        if !self.converges() {
            return Err(Error::DivergentInput(format!(
                "∫ (tanh x/x)^{} tanh^{} x e^(-0x) diverges at infinity",
                self.n_exponent, self.k
            )));
        }
        let prec = ctx.prec() + 16;
        let f = |x: &Float| Ok(self.integrand(x, prec));
        integrate_semi_infinite(&f, ctx, None)
    }
}

/// Oracle ∫₀^∞ sech^L x e^{-Tx} dx for real L, T ≥ 0.
pub fn sech_power_exp_oracle(l: &Float, t: &Float, ctx: &PrecisionContext) -> Result<QuadratureResult> {
    IntegralSpec::new(0, 0, l, t)?.integral(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        let p = 64;
        assert!(matches!(IntegralSpec::from_f64(0, 0, 0.0, 0.0, p), Err(Error::DivergentInput(_))));
        assert!(IntegralSpec::from_f64(1, 0, -1.0, 0.0, p).is_err());
        assert!(matches!(IntegralSpec::from_f64(1, 0, 1.0, -0.5, p), Err(Error::UnsupportedParameter(_))));
        let s = IntegralSpec::from_f64(1, 0, 0.0, 0.0, p).unwrap();
        assert!(!s.converges());
        let ctx = PrecisionContext::new(64).unwrap();
        assert!(matches!(s.integral(&ctx), Err(Error::DivergentInput(_))));
    }

    #[test]
    fn elementary_integrals() {
        let ctx = PrecisionContext::new(128).unwrap();
        let p = ctx.prec();
        // ∫ sech = π/2, ∫ sech² = 1, ∫ tanh sech² = 1/2, ∫ sech e^{-x} = log 2
        let cases = [
            (0, 0, 1.0, 0.0, Float::with_val(p, rug::float::Constant::Pi) / 2u32),
            (0, 0, 2.0, 0.0, Float::with_val(p, 1)),
            (0, 1, 2.0, 0.0, Float::with_val(p, 0.5)),
            (0, 0, 1.0, 1.0, Float::with_val(p, rug::float::Constant::Log2)),
        ];
        for (n, k, l, t, want) in cases {
            let r = IntegralSpec::from_f64(n, k, l, t, p).unwrap().integral(&ctx).unwrap();
            let e = Float::with_val(p, &r.value - &want).abs();
            assert!(e < 1e-34, "({n},{k},{l},{t}): {}", e.to_f64());
        }
    }
}

//! ψ-based closed forms for ∫ sech^m x e^{-Tx} dx and ∫ tanh x sech^m x e^{-Tx} dx,
//! and the residual checks of the two-step recurrence and the partial integration lemma.

use rug::Float;

use super::spec::{sech_power_exp_oracle, IntegralSpec};
use crate::error::{Error, Result};
use crate::exact::factorial;
use crate::hiprec::context::finite;
use crate::hiprec::{digamma, PrecisionContext};

fn check_t(t: &Float) -> Result<()> {
    if !t.is_finite() || *t < 0 {
        return Err(Error::Domain(format!("T must be >= 0, got {}", t.to_f64())));
    }
    Ok(())
}

fn integer_power(l: &Float) -> Result<u32> {
    if !l.is_finite() || *l < 0 {
        return Err(Error::Domain(format!("sech power must be >= 0, got {}", l.to_f64())));
    }
    if !l.is_integer() {
        return Err(Error::UnsupportedParameter(format!(
            "closed form needs an integer sech power, got {}; use the quadrature oracle",
            l.to_f64()
        )));
    }
    l.to_u32_saturating()
        .filter(|&m| m < 100_000)
        .ok_or_else(|| Error::UnsupportedParameter("sech power too large".into()))
}

// Guard bits lost to cancellation between the T^m polynomial and the ψ difference.
fn guard_for(m: u32, t: &Float) -> u32 {
    let lt = (t.to_f64() + 2.0).log2();
    (2.0 * m as f64 * lt).ceil() as u32 + 16
}

/// ψ((T+4)/4) - ψ((T+2)/4).
pub fn psi_diff_even(t: &Float, ctx: &PrecisionContext) -> Result<Float> {
    psi_pair(t, 4, 2, ctx)
}

/// ψ((T+3)/4) - ψ((T+1)/4).
pub fn psi_diff_odd(t: &Float, ctx: &PrecisionContext) -> Result<Float> {
    psi_pair(t, 3, 1, ctx)
}

fn psi_pair(t: &Float, a: u32, b: u32, ctx: &PrecisionContext) -> Result<Float> {
    let p = ctx.prec();
    let za = Float::with_val(p, t + a) / 4u32;
    let zb = Float::with_val(p, t + b) / 4u32;
    Ok(digamma(&za, ctx)? - digamma(&zb, ctx)?)
}

// Base case: ∫ sech² e^{-Tx} for even m, ∫ sech e^{-Tx} for odd m.
fn base(m: u32, t: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let p = ctx.prec();
    if m % 2 == 0 {
        let d = psi_diff_even(t, ctx)?;
        Ok(1u32 - Float::with_val(p, t * d) / 2u32)
    } else {
        Ok(psi_diff_odd(t, ctx)? / 2u32)
    }
}

// The factors b ≡ m (mod 2), 1 ≤ b ≤ m-2, and T², shared by both families.
struct Ladder {
    b: Vec<u32>,
    t2: Float,
}

impl Ladder {
    fn new(m: u32, t: &Float, p: u32) -> Self {
        let first = if m % 2 == 0 { 2 } else { 1 };
        let b = (first..m.saturating_sub(1)).step_by(2).collect();
        Ladder { b, t2: Float::with_val(p, t.square_ref()) }
    }

    fn factor(&self, b: u32, p: u32) -> Float {
        Float::with_val(p, b * b) - &self.t2
    }

    // Π_b (b² - T²)
    fn full_product(&self, p: u32) -> Float {
        let mut acc = Float::with_val(p, 1);
        for &b in &self.b {
            acc *= self.factor(b, p);
        }
        acc
    }

    // Σ_b {Π_{b' > b} (b'² - T²)/(b'(b'+1))} w / (b(b+1))
    fn tail(&self, w: &Float, p: u32) -> Float {
        let mut sum = Float::with_val(p, 0);
        let mut run = Float::with_val(p, 1);
        for &b in self.b.iter().rev() {
            sum += Float::with_val(p, w * &run) / (b * (b + 1));
            run *= self.factor(b, p);
            run /= b * (b + 1);
        }
        sum
    }
}

/// ∫₀^∞ sech^L x e^{-Tx} dx for integer L ≥ 0 (L = 0 needs T > 0).
pub fn sech_power_exp(l: &Float, t: &Float, ctx: &PrecisionContext) -> Result<Float> {
    check_t(t)?;
    let m = integer_power(l)?;
    if m == 0 {
        if t.is_zero() {
            return Err(Error::DivergentInput("∫ e^(-Tx) with T = 0".into()));
        }
        return finite(Float::with_val(ctx.prec(), t.recip_ref()), "sech_power_exp");
    }
    let c = ctx.raised(guard_for(m, t));
    let p = c.prec();
    let lad = Ladder::new(m, t, p);
    let mut v = base(m, t, &c)? * lad.full_product(p);
    v /= Float::with_val(p, factorial(m - 1));
    v += lad.tail(&Float::with_val(p, t), p);
    finite(Float::with_val(ctx.prec(), v), "sech_power_exp")
}

/// ∫₀^∞ tanh x sech^m x e^{-Tx} dx for integer m ≥ 1; equals 1/m at T = 0.
pub fn tanh_sech_power_exp(m: u32, t: &Float, ctx: &PrecisionContext) -> Result<Float> {
    check_t(t)?;
    if m == 0 {
        return Err(Error::UnsupportedParameter("tanh·sech^m needs m >= 1".into()));
    }
    let c = ctx.raised(guard_for(m + 1, t));
    let p = c.prec();
    let lad = Ladder::new(m, t, p);
    let mut lead = base(m, t, &c)? * lad.full_product(p);
    lead *= t;
    lead /= Float::with_val(p, factorial(m));
    let tail = lad.tail(&lad.t2, p) / m;
    let v = Float::with_val(p, 1u32) / m - lead - tail;
    finite(Float::with_val(ctx.prec(), v), "tanh_sech_power_exp")
}

/// A residual together with the oracle error budget that went into it.
#[derive(Clone, Debug)]
pub struct Residual {
    /// |left - right|
    pub residual: Float,
    /// Σ |coefficient| · quadrature error estimate.
    pub oracle_error: Float,
    /// Largest |term| in the relation, for relative comparisons.
    pub scale: Float,
}

impl Residual {
    fn from_terms(terms: &[(Float, Float, Float)], prec: u32) -> Self {
        let mut sum = Float::with_val(prec, 0);
        let mut err = Float::with_val(prec, 0);
        let mut scale = Float::with_val(prec, 0);
        for (c, v, e) in terms {
            let term = Float::with_val(prec, c * v);
            let a = Float::with_val(prec, term.abs_ref());
            if a > scale {
                scale = a;
            }
            sum += term;
            err += Float::with_val(prec, c.abs_ref()) * e;
        }
        Residual { residual: sum.abs(), oracle_error: err, scale }
    }
}

/// (L+2)(L+3) I(L+4) - ((L+1)(2L+3) - T² + 1) I(L+2) - (T² - L²) I(L), I(L) = ∫ sech^L e^{-Tx} by quadrature.
pub fn two_step_recurrence_residual(l: &Float, t: &Float, ctx: &PrecisionContext) -> Result<Residual> {
    if !l.is_finite() || *l <= 0 {
        return Err(Error::Domain("two-step recurrence needs L > 0".into()));
    }
    check_t(t)?;
    let p = ctx.prec();
    let i = |d: u32| sech_power_exp_oracle(&Float::with_val(p, l + d), t, ctx);
    let (i0, i2, i4) = (i(0)?, i(2)?, i(4)?);
    let t2 = Float::with_val(p, t.square_ref());
    let l2 = Float::with_val(p, l.square_ref());
    let c4 = Float::with_val(p, l + 2u32) * Float::with_val(p, l + 3u32);
    let c2 = Float::with_val(p, l + 1u32) * Float::with_val(p, Float::with_val(p, l * 2u32) + 3u32) - &t2 + 1u32;
    let c0 = t2 - l2;
    Ok(Residual::from_terms(
        &[
            (c4, i4.value, i4.est_error),
            (-c2, i2.value, i2.est_error),
            (-c0, i0.value, i0.est_error),
        ],
        p,
    ))
}

/// N I(N+1,K,L,T) - (N+K+1) I(N,K,L+2,T) + L I(N,K+2,L,T) + T I(N,K+1,L,T), all by quadrature.
pub fn partial_integration_residual(spec: &IntegralSpec, ctx: &PrecisionContext) -> Result<Residual> {
    let n = spec.n_exponent;
    if n == 0 && spec.l.is_zero() && spec.t.is_zero() {
        return Err(Error::DivergentInput(
            "boundary term tanh^(K+1) x does not vanish at infinity for N = L = T = 0".into(),
        ));
    }
    let p = ctx.prec();
    let plan = [
        (Float::with_val(p, n), spec.shifted(1, 0, 0)),
        (Float::with_val(p, -((n + spec.k + 1) as i64)), spec.shifted(0, 0, 2)),
        (Float::with_val(p, &spec.l), spec.shifted(0, 2, 0)),
        (Float::with_val(p, &spec.t), spec.shifted(0, 1, 0)),
    ];
    let mut terms = Vec::with_capacity(4);
    for (c, s) in plan {
        if c.is_zero() {
            continue;
        }
        let r = s.integral(ctx)?;
        terms.push((c, r.value, r.est_error));
    }
    Ok(Residual::from_terms(&terms, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::float::Constant;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(128).unwrap()
    }

    fn close(a: &Float, b: &Float, tol: f64) -> bool {
        Float::with_val(a.prec(), a - b).abs() < tol
    }

    #[test]
    fn small_cases() {
        let c = ctx();
        let p = c.prec();
        let r = |x: f64| c.real(x);
        let ln2 = Float::with_val(p, Constant::Log2);
        let pi2 = Float::with_val(p, Constant::Pi) / 2u32;
        assert!(close(&sech_power_exp(&r(1.0), &r(1.0), &c).unwrap(), &ln2, 1e-40));
        assert!(close(&sech_power_exp(&r(1.0), &r(0.0), &c).unwrap(), &pi2, 1e-40));
        assert!(close(&sech_power_exp(&r(2.0), &r(0.0), &c).unwrap(), &r(1.0), 1e-40));
        assert!(close(&tanh_sech_power_exp(2, &r(0.0), &c).unwrap(), &r(0.5), 1e-40));
        assert!(close(&tanh_sech_power_exp(1, &r(0.0), &c).unwrap(), &r(1.0), 1e-40));
        assert!(matches!(sech_power_exp(&r(1.5), &r(1.0), &c), Err(Error::UnsupportedParameter(_))));
        assert!(matches!(sech_power_exp(&r(1.0), &r(-1.0), &c), Err(Error::Domain(_))));
    }

    #[test]
    fn closed_forms_match_oracle() {
        let c = ctx();
        for m in 1..=7u32 {
            for t in [0.0, 0.5, 1.0, 2.0, 3.7, 9.0] {
                let l = c.real(m);
                let tt = c.real(t);
                let closed = sech_power_exp(&l, &tt, &c).unwrap();
                let oracle = sech_power_exp_oracle(&l, &tt, &c).unwrap();
                assert!(close(&closed, &oracle.value, 1e-32), "sech^{m}, T={t}");
                let closed = tanh_sech_power_exp(m, &tt, &c).unwrap();
                let oracle = IntegralSpec::new(0, 1, &l, &tt).unwrap().integral(&c).unwrap();
                assert!(close(&closed, &oracle.value, 1e-32), "tanh sech^{m}, T={t}");
            }
        }
    }

    #[test]
    fn first_order_relation() {
        // T ∫ tanh sech^m = (m+1) ∫ sech^{m+2} - m ∫ sech^m
        let c = ctx();
        let p = c.prec();
        for m in 1..=6u32 {
            let t = c.real(1.0);
            let lhs = tanh_sech_power_exp(m, &t, &c).unwrap();
            let a = sech_power_exp(&c.real(m + 2), &t, &c).unwrap() * (m + 1);
            let b = sech_power_exp(&c.real(m), &t, &c).unwrap() * m;
            assert!(close(&lhs, &Float::with_val(p, a - b), 1e-40), "m={m}");
        }
    }

    #[test]
    fn large_t_keeps_precision() {
        let c = ctx();
        let t = c.real(200.5);
        let closed = sech_power_exp(&c.real(6), &t, &c).unwrap();
        let oracle = sech_power_exp_oracle(&c.real(6), &t, &c).unwrap();
        let rel = Float::with_val(c.prec(), &closed - &oracle.value).abs() / &oracle.value;
        assert!(rel < 1e-30, "{}", rel.to_f64());
    }

    #[test]
    fn residuals_vanish() {
        let c = ctx();
        for (l, t) in [(1.0, 0.0), (2.5, 1.3), (3.0, 2.0)] {
            let r = two_step_recurrence_residual(&c.real(l), &c.real(t), &c).unwrap();
            assert!(r.residual < 1e-30, "L={l} T={t}: {}", r.residual.to_f64());
        }
        for (n, k, l, t) in [(1, 0, 1.0, 0.0), (2, 1, 0.5, 1.5), (1, 2, 3.0, 0.0)] {
            let s = IntegralSpec::from_f64(n, k, l, t, c.prec()).unwrap();
            let r = partial_integration_residual(&s, &c).unwrap();
            assert!(r.residual < 1e-30, "({n},{k},{l},{t}): {}", r.residual.to_f64());
        }
        let s = IntegralSpec::from_f64(0, 1, 0.0, 0.0, c.prec()).unwrap();
        assert!(matches!(partial_integration_residual(&s, &c), Err(Error::DivergentInput(_))));
    }
}

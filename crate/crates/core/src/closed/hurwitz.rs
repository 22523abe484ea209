//! ∫₀^∞ tanh(x)/x · sech^L x · e^{-Tx} dx for L = 1..4 and real T ≥ 0,
//! as polynomials in T times differences of ζ'(-k, ·) and log Γ.

use rug::Float;

use crate::error::{Error, Result};
use crate::hiprec::context::finite;
use crate::hiprec::{hurwitz_zeta_sderiv, log_gamma, PrecisionContext};

// D_k = ζ'(-k, a) - ζ'(-k, b), D_0 = log Γ(a) - log Γ(b)
fn differences(l: u32, t: &Float, ctx: &PrecisionContext) -> Result<Vec<Float>> {
    let p = ctx.prec();
    let (ua, ub) = if l % 2 == 1 { (1u32, 3u32) } else { (2, 4) };
    let a = Float::with_val(p, t + ua) / 4u32;
    let b = Float::with_val(p, t + ub) / 4u32;
    let mut d = vec![log_gamma(&a, ctx)? - log_gamma(&b, ctx)?];
    for k in 1..=l as i32 {
        let s = ctx.real(-k);
        d.push(hurwitz_zeta_sderiv(&s, &a, ctx)? - hurwitz_zeta_sderiv(&s, &b, ctx)?);
    }
    Ok(d)
}

type Poly = &'static [(i64, i64)];

// (numerator, denominator) of the T^i coefficient, for D_k, k = 0..=L.
const L1: [Poly; 2] = [&[(0, 1), (-2, 1)], &[(8, 1)]];
const L2: [Poly; 3] = [&[(0, 1), (0, 1), (1, 1)], &[(0, 1), (-8, 1)], &[(16, 1)]];
const L3: [Poly; 4] = [
    &[(0, 1), (-1, 3), (0, 1), (1, 3)],
    &[(4, 3), (0, 1), (-4, 1)],
    &[(0, 1), (16, 1)],
    &[(-64, 3)],
];
const L4: [Poly; 5] = [
    &[(0, 1), (0, 1), (1, 3), (0, 1), (-1, 12)],
    &[(0, 1), (-8, 3), (0, 1), (4, 3)],
    &[(16, 3), (0, 1), (-8, 1)],
    &[(0, 1), (64, 3)],
    &[(-64, 3)],
];

fn table(l: u32) -> Option<&'static [Poly]> {
    match l {
        1 => Some(&L1),
        2 => Some(&L2),
        3 => Some(&L3),
        4 => Some(&L4),
        _ => None,
    }
}

fn eval_poly(poly: Poly, t: &Float, p: u32) -> Float {
    let mut acc = Float::with_val(p, 0);
    for &(num, den) in poly.iter().rev() {
        acc *= t;
        acc += Float::with_val(p, num) / den;
    }
    acc
}

/// ∫₀^∞ tanh(x)/x · sech^L x · e^{-Tx} dx for L ∈ {1, 2, 3, 4} and T ≥ 0.
pub fn tanh_over_x_sech_exp(l: u32, t: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let polys = table(l).ok_or_else(|| {
        Error::UnsupportedParameter(format!(
            "closed form in T known only for L = 1..4, got L = {l}; \
             for L >= 5 only the conjectured polynomial shape is available (use the oracle)"
        ))
    })?;
    if !t.is_finite() || *t < 0 {
        return Err(Error::Domain(format!("T must be >= 0, got {}", t.to_f64())));
    }
    let guard = (4.0 * (l as f64 + 1.0) * (t.to_f64() + 2.0).log2()).ceil() as u32 + 24;
    let c = ctx.raised(guard);
    let p = c.prec();
    let t = Float::with_val(p, t);
    let d = differences(l, &t, &c)?;
    let mut v = Float::with_val(p, 0);
    for (poly, dk) in polys.iter().zip(&d) {
        v += eval_poly(poly, &t, p) * dk;
    }
    finite(Float::with_val(ctx.prec(), v), "tanh_over_x_sech_exp")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed::sech::tanh_sech_power_exp;
    use crate::closed::spec::IntegralSpec;
    use crate::hiprec::Constants;
    use crate::quad::integrate_finite;

    #[test]
    fn t_zero_values() {
        let ctx = PrecisionContext::new(128).unwrap();
        let k = Constants::at(&ctx).unwrap();
        let p = ctx.prec();
        let zero = ctx.real(0);
        let want1 = Float::with_val(p, &k.beta2 / &k.pi) * 4u32;
        let pi2 = Float::with_val(p, k.pi.square_ref());
        let want2 = Float::with_val(p, &k.zeta3 / &pi2) * 7u32;
        for (l, want) in [(1, want1), (2, want2)] {
            let v = tanh_over_x_sech_exp(l, &zero, &ctx).unwrap();
            assert!(Float::with_val(p, &v - &want).abs() < 1e-40, "L={l}");
        }
        // T = 1, L = 1: -(1/3) log 2 - log π - 12 ζ'(-1)
        let v = tanh_over_x_sech_exp(1, &ctx.real(1), &ctx).unwrap();
        let want = -Float::with_val(p, &k.log2 / 3u32) - &k.logpi - Float::with_val(p, &k.zeta_dot_m1 * 12u32);
        assert!(Float::with_val(p, &v - &want).abs() < 1e-40);
    }

    #[test]
    fn matches_oracle() {
        let ctx = PrecisionContext::new(128).unwrap();
        for l in 1..=4u32 {
            for t in [0.0, 0.3, 1.0, 2.5, 7.0, 12.0] {
                let tt = ctx.real(t);
                let v = tanh_over_x_sech_exp(l, &tt, &ctx).unwrap();
                let o = IntegralSpec::new(1, 0, &ctx.real(l), &tt).unwrap().integral(&ctx).unwrap();
                let e = Float::with_val(ctx.prec(), &v - &o.value).abs();
                assert!(e < 1e-32, "L={l} T={t}: {}", e.to_f64());
            }
        }
    }

    #[test]
    fn split_lemma() {
        let ctx = PrecisionContext::new(128).unwrap();
        let zero = ctx.real(0);
        for l in 1..=4u32 {
            let at0 = tanh_over_x_sech_exp(l, &zero, &ctx).unwrap();
            for t in [0.5, 1.5, 2.5] {
                let tt = ctx.real(t);
                let at_t = tanh_over_x_sech_exp(l, &tt, &ctx).unwrap();
                let f = |s: &Float| tanh_sech_power_exp(l, s, &ctx);
                let q = integrate_finite(&f, &zero, &tt, &ctx, None).unwrap();
                let e = Float::with_val(ctx.prec(), at_t - &at0 + &q.value).abs();
                assert!(e < 1e-32, "L={l} T={t}: {}", e.to_f64());
            }
        }
    }

    #[test]
    fn rejects_l5() {
        let ctx = PrecisionContext::new(64).unwrap();
        assert!(matches!(tanh_over_x_sech_exp(5, &ctx.real(0.5), &ctx), Err(Error::UnsupportedParameter(_))));
    }
}

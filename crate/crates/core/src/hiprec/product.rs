//! f(s) = log Π_{k≥0} e^{1/2} ((k+s)/(k+s+1/2))^{k+s+1/4}.

use rug::Float;

use super::context::{finite, PrecisionContext};
use super::gamma::log_gamma;
use super::zeta::hurwitz_zeta_sderiv;
use crate::error::{Error, Result};

fn check_s(s: &Float) -> Result<()> {
    if !s.is_finite() || *s <= 0 {
        return Err(Error::Domain("f(s) needs s > 0".into()));
    }
    Ok(())
}

/// k-th term ½ + (k+s+¼) log((k+s)/(k+s+½)).
pub fn f_term(s: &Float, k: u64, prec: u32) -> Float {
    let a = Float::with_val(prec, s + k);
    let b = Float::with_val(prec, &a + 0.5f64);
    let w = Float::with_val(prec, &a + 0.25f64);
    let l = Float::with_val(prec, &a / &b).ln();
    w * l + 0.5f64
}

/// Partial sum of the first `terms` factors of f(s) (in log form).
pub fn f_product_partial(s: &Float, terms: u64, ctx: &PrecisionContext) -> Result<Float> {
    check_s(s)?;
    let p = ctx.prec() + 16;
    let mut acc = Float::with_val(p, 0);
    for k in 0..terms {
        acc += f_term(s, k, p);
    }
    finite(Float::with_val(ctx.prec(), acc), "f_product_partial")
}

/// f(s) = ζ'(-1,s+½) - ζ'(-1,s) + ¼(-log Γ(2s+1) + log s) + ½(log 2 - 1)s + ¼ log 2 + ⅛ log π + ⅛.
pub fn f_closed(s: &Float, ctx: &PrecisionContext) -> Result<Float> {
    check_s(s)?;
    let c = ctx.raised(16);
    let p = c.prec();
    let m1 = c.real(-1);
    let s = Float::with_val(p, s);
    let sh = Float::with_val(p, &s + 0.5f64);
    let mut v = hurwitz_zeta_sderiv(&m1, &sh, &c)? - hurwitz_zeta_sderiv(&m1, &s, &c)?;
    let g = log_gamma(&Float::with_val(p, Float::with_val(p, &s * 2u32) + 1u32), &c)?;
    v += (Float::with_val(p, s.ln_ref()) - g) / 4u32;
    v += Float::with_val(p, c.ln2() - 1u32) * &s / 2u32;
    v += c.ln2() / 4u32 + c.pi().ln() / 8u32 + 0.125f64;
    finite(Float::with_val(ctx.prec(), v), "f_closed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_sums_approach_closed_form() {
        let c = PrecisionContext::new(128).unwrap();
        for s in [0.25, 0.5, 1.0, 2.5] {
            let x = c.real(s);
            let closed = f_closed(&x, &c).unwrap();
            let a = f_product_partial(&x, 1000, &c).unwrap();
            let b = f_product_partial(&x, 4000, &c).unwrap();
            let ea = Float::with_val(c.prec(), &a - &closed).abs().to_f64();
            let eb = Float::with_val(c.prec(), &b - &closed).abs().to_f64();
            // the tail decays like 1/k
            assert!(ea < 1e-4 && eb < ea / 3.0, "s={s}: {ea} {eb}");
        }
    }
}

//! Partial products for β(2) and ζ'(-1).

use rug::Float;

use crate::error::{Error, Result};
use crate::hiprec::context::finite;
use crate::hiprec::PrecisionContext;

fn check_terms(terms: u64) -> Result<()> {
    if terms == 0 {
        return Err(Error::Domain("product needs at least one factor".into()));
    }
    Ok(())
}

/// π/4 log 2 + 2π Σ_{k<terms} (-1/2 + (k+1/2) log((4k+3)/(4k+1))).
pub fn infinite_product_beta2(terms: u64, ctx: &PrecisionContext) -> Result<Float> {
    check_terms(terms)?;
    let p = ctx.prec() + 16;
    let mut acc = Float::with_val(p, 0);
    for k in 0..terms {
        let r = Float::with_val(p, 2u32) / (4 * k + 1);
        let w = Float::with_val(p, k) + 0.5f64;
        acc += w * r.ln_1p() - 0.5f64;
    }
    let pi = Float::with_val(p, rug::float::Constant::Pi);
    let ln2 = Float::with_val(p, rug::float::Constant::Log2);
    let v = Float::with_val(p, &pi * &ln2) / 4u32 + pi * acc * 2u32;
    finite(Float::with_val(ctx.prec(), v), "infinite_product_beta2")
}

/// 1/12 - 7/36 log 2 - 1/12 log π + 2/3 Σ_{k<terms} (1/2 + (k+3/4) log((2k+1)/(2k+2))).
pub fn infinite_product_zdot(terms: u64, ctx: &PrecisionContext) -> Result<Float> {
    check_terms(terms)?;
    let p = ctx.prec() + 16;
    let mut acc = Float::with_val(p, 0);
    for k in 0..terms {
        let r = Float::with_val(p, -1i32) / (2 * k + 2);
        let w = Float::with_val(p, k) + 0.75f64;
        acc += w * r.ln_1p() + 0.5f64;
    }
    let ln2 = Float::with_val(p, rug::float::Constant::Log2);
    let lnpi = Float::with_val(p, rug::float::Constant::Pi).ln();
    let mut v = Float::with_val(p, 1u32) / 12u32;
    v -= ln2 * 7u32 / 36u32;
    v -= lnpi / 12u32;
    v += acc * 2u32 / 3u32;
    finite(Float::with_val(ctx.prec(), v), "infinite_product_zdot")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hiprec::{dirichlet_beta, zeta_sderiv};

    #[test]
    fn products_converge() {
        let ctx = PrecisionContext::new(128).unwrap();
        let b2 = dirichlet_beta(&ctx.real(2), &ctx).unwrap();
        let zd = zeta_sderiv(&ctx.real(-1), &ctx).unwrap();
        let mut prev = (f64::INFINITY, f64::INFINITY);
        for terms in [10u64, 100, 1000, 10000] {
            let eb = (infinite_product_beta2(terms, &ctx).unwrap() - &b2).abs().to_f64();
            let ez = (infinite_product_zdot(terms, &ctx).unwrap() - &zd).abs().to_f64();
            assert!(eb < prev.0 && ez < prev.1, "terms={terms}");
            prev = (eb, ez);
        }
        assert!(prev.0 < 1e-3 && prev.1 < 1e-3);
        assert!(infinite_product_beta2(1, &ctx).unwrap().is_finite());
        assert!(infinite_product_beta2(0, &ctx).is_err());
    }
}

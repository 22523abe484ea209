//! ∫₀^∞ sech^L x e^{-Tx} dx and ∫₀^∞ tanh x sech^L x e^{-Tx} dx from their
//! digamma closed forms, next to the quadrature oracle.
//!
//! cargo run --release --example sech_closed_forms [bits]

use hypint::closed::{sech_power_exp, tanh_sech_power_exp, IntegralSpec};
use hypint::{Float, PrecisionContext};

fn main() -> hypint::Result<()> {
    let bits = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(128);
    let ctx = PrecisionContext::new(bits)?;
    println!("{:>2} {:>6} {:>12} {:>12}", "L", "T", "sech err", "tanh err");
    for l in 1..=8u32 {
        for t in [0.0, 0.5, 1.0, 3.25, 10.0] {
            let (lf, tf) = (ctx.real(l), ctx.real(t));
            let a = sech_power_exp(&lf, &tf, &ctx)?;
            let qa = IntegralSpec::new(0, 0, &lf, &tf)?.integral(&ctx)?;
            let b = tanh_sech_power_exp(l, &tf, &ctx)?;
            let qb = IntegralSpec::new(0, 1, &lf, &tf)?.integral(&ctx)?;
            let ea = Float::with_val(ctx.prec(), &a - &qa.value).abs();
            let eb = Float::with_val(ctx.prec(), &b - &qb.value).abs();
            println!("{l:>2} {t:>6} {:>12.3e} {:>12.3e}", ea.to_f64(), eb.to_f64());
        }
    }
    Ok(())
}

//! ∫₀^∞ tanh(x)/x · sech^L x · e^{-Tx} dx for L = 1..4 as a function of real T,
//! compared with direct quadrature.
//!
//! cargo run --release --example hurwitz_closed_forms [bits]

use hypint::closed::{tanh_over_x_sech_exp, IntegralSpec};
use hypint::hiprec::format_real;
use hypint::{Float, PrecisionContext};

fn main() -> hypint::Result<()> {
    let bits = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(128);
    let ctx = PrecisionContext::new(bits)?;
    for l in 1..=4u32 {
        println!("L = {l}");
        for t in [0.0, 0.25, 1.0, 2.5, 7.0, 40.0] {
            let tf = ctx.real(t);
            let v = tanh_over_x_sech_exp(l, &tf, &ctx)?;
            let q = IntegralSpec::new(1, 0, &ctx.real(l), &tf)?.integral(&ctx)?;
            let err = Float::with_val(ctx.prec(), &v - &q.value).abs();
            println!("  T = {t:>5}  {}  |closed - quad| = {:.2e}", format_real(&v, &ctx), err.to_f64());
        }
    }
    Ok(())
}

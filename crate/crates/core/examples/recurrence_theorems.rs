//! The T = 0 values for every L through the β(2k) and ζ(2k+1) recurrences, and
//! the integrals of (tanh x / x)^N.
//!
//! cargo run --release --example recurrence_theorems [bits]

use hypint::closed::{
    beta_recurrence_coeffs, beta_recurrence_eval, tanh_over_x_power, zeta_recurrence_coeffs, zeta_recurrence_eval,
    IntegralSpec,
};
use hypint::hiprec::format_real;
use hypint::{Float, PrecisionContext, Rational};

fn list(v: &[Rational]) -> String {
    v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ")
}

fn gap(a: &Float, b: &Float, ctx: &PrecisionContext) -> f64 {
    Float::with_val(ctx.prec(), a - b).abs().to_f64()
}

fn main() -> hypint::Result<()> {
    let bits = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(128);
    let ctx = PrecisionContext::new(bits)?;
    let zero = ctx.real(0);
    for l in 1..=10u32 {
        let (v, coeffs) = if l % 2 == 1 {
            let n = (l - 1) / 2;
            (beta_recurrence_eval(n, &ctx)?, beta_recurrence_coeffs(n)?)
        } else {
            (zeta_recurrence_eval(l / 2, &ctx)?, zeta_recurrence_coeffs(l / 2)?)
        };
        let q = IntegralSpec::new(1, 0, &ctx.real(l), &zero)?.integral(&ctx)?;
        println!("sech^{l:<2} [{}]", list(&coeffs));
        println!("         {}  quad gap {:.1e}", format_real(&v, &ctx), gap(&v, &q.value, &ctx));
    }
    println!();
    for n in 2..=9u32 {
        let p = tanh_over_x_power(n, &ctx)?;
        let q = IntegralSpec::new(n, 0, &zero, &zero)?.integral(&ctx)?;
        println!("(tanh x/x)^{n}: [{}]", list(&p.zeta_coeffs));
        println!("         {}  quad gap {:.1e}", format_real(&p.value, &ctx), gap(&p.value, &q.value, &ctx));
    }
    Ok(())
}

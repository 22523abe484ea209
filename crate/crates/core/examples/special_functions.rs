//! Values of the special functions against well-known closed forms.
//!
//! cargo run --release --example special_functions [bits]

use hypint::hiprec::{
    dirichlet_beta, dirichlet_eta, dirichlet_lambda, format_real, hurwitz_zeta, log_gamma, polygamma, polylog,
    riemann_zeta, zeta_sderiv, Constants,
};
use hypint::{Float, PrecisionContext};

fn main() -> hypint::Result<()> {
    let bits = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(128);
    let ctx = PrecisionContext::new(bits)?;
    let p = ctx.prec();
    let pi = ctx.pi();
    let c = Constants::at(&ctx)?;

    let row = |name: &str, got: Float, want: Float| {
        let err = Float::with_val(p, &got - &want).abs();
        println!("{name:<28} {}  err {:.2e}", format_real(&got, &ctx), err.to_f64());
    };

    row("ζ(2) vs π²/6", riemann_zeta(&ctx.real(2), &ctx)?, Float::with_val(p, &pi * &pi) / 6);
    row("ζ(1/2, 1/4) + ζ(1/2, 3/4)", {
        let a = hurwitz_zeta(&ctx.real(0.5), &ctx.real(0.25), &ctx)?;
        a + hurwitz_zeta(&ctx.real(0.5), &ctx.real(0.75), &ctx)?
    }, {
        // (4^s - 2^s) ζ(s)
        let z = riemann_zeta(&ctx.real(0.5), &ctx)?;
        z * (Float::with_val(p, 2) - Float::with_val(p, 2).sqrt())
    });
    row("β(1) vs π/4", dirichlet_beta(&ctx.real(1), &ctx)?, Float::with_val(p, &pi / 4));
    let catalan = Float::with_val(p, Float::parse("0.9159655941772190150546035149323841107741").unwrap());
    row("β(2) vs Catalan", dirichlet_beta(&ctx.real(2), &ctx)?, catalan);
    row("η(1) vs log 2", dirichlet_eta(&ctx.real(1), &ctx)?, ctx.ln2());
    row("λ(2) vs π²/8", dirichlet_lambda(&ctx.real(2), &ctx)?, Float::with_val(p, &pi * &pi) / 8);
    row("ζ'(0) vs -log(2π)/2", zeta_sderiv(&ctx.real(0), &ctx)?, -Float::with_val(p, &pi * 2u32).ln() / 2);
    row("log Γ(1/2) vs log π/2", log_gamma(&ctx.real(0.5), &ctx)?, Float::with_val(p, pi.ln_ref()) / 2);
    row("ψ'(1/4) vs π² + 8G", polygamma(1, &ctx.real(0.25), &ctx)?, Float::with_val(p, &pi * &pi) + c.beta2.clone() * 8u32);
    row("Li₂(1/2) vs π²/12 - log²2/2", polylog(&ctx.real(2), &ctx.real(0.5), &ctx)?, {
        let l2 = ctx.ln2();
        Float::with_val(p, &pi * &pi) / 12 - Float::with_val(p, &l2 * &l2) / 2
    });
    Ok(())
}

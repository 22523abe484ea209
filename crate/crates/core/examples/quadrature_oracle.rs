//! The numerical oracle on integrals and series with known values.
//!
//! cargo run --release --example quadrature_oracle [bits]

use hypint::quad::{integrate_finite, integrate_loglog, integrate_semi_infinite, sum_series, LogLogKind, SeriesClass};
use hypint::{Float, PrecisionContext};

fn main() -> hypint::Result<()> {
    let bits = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(128);
    let ctx = PrecisionContext::new(bits)?;
    let p = ctx.prec() + 16;
    let pi = Float::with_val(p, ctx.pi());
    let report = |name: &str, got: &Float, est: &Float, want: &Float| {
        let err = Float::with_val(p, got - want).abs();
        println!("{name:<34} err {:.2e}  est {:.2e}", err.to_f64(), est.to_f64());
    };

    // ∫ x/sinh x = π²/4
    let f = |x: &Float| Ok(if x.is_zero() { Float::with_val(p, 1) } else { Float::with_val(p, x) / Float::with_val(p, x.sinh_ref()) });
    let r = integrate_semi_infinite(&f, &ctx, None)?;
    report("∫ x/sinh x dx = π²/4", &r.value, &r.est_error, &(Float::with_val(p, &pi * &pi) / 4));

    // ∫₀¹ log(x)/(1+x) = -π²/12, log singularity at 0
    let g = |x: &Float| Ok(Float::with_val(p, x.ln_ref()) / (Float::with_val(p, x) + 1));
    let r = integrate_finite(&g, &ctx.real(0), &ctx.real(1), &ctx, None)?;
    report("∫₀¹ log x/(1+x) dx = -π²/12", &r.value, &r.est_error, &(-Float::with_val(p, &pi * &pi) / 12));

    // Σ 1/k² by extrapolation
    let term = |k: u64| Ok(Float::with_val(p, k).square().recip());
    let class = SeriesClass::Algebraic { tail_exponent: 1.0, even_only: false };
    let s = sum_series(&term, 1, &class, &ctx, None)?;
    report("Σ 1/k² = π²/6", &s.value, &s.est_error, &(Float::with_val(p, &pi * &pi) / 6));

    // Σ (-1)^k/(2k+1) = π/4
    let term = |k: u64| {
        let v = Float::with_val(p, 2 * k + 1).recip();
        Ok(if k % 2 == 0 { v } else { -v })
    };
    let s = sum_series(&term, 0, &SeriesClass::Alternating, &ctx, None)?;
    report("Σ (-1)^k/(2k+1) = π/4", &s.value, &s.est_error, &(Float::with_val(p, &pi / 4)));

    for n in 1..=3 {
        let b = integrate_loglog(LogLogKind::Beta, n, &ctx)?;
        let z = integrate_loglog(LogLogKind::Zeta, n, &ctx)?;
        println!("loglog N={n}: beta {}  zeta {}", b.value.to_string_radix(10, Some(25)), z.value.to_string_radix(10, Some(25)));
    }
    Ok(())
}

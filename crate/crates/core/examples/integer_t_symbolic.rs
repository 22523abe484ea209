//! Exact constant combinations at integer T, evaluated and checked against the
//! continuous-T closed form.
//!
//! cargo run --release --example integer_t_symbolic [L] [T_max]

use hypint::closed::{tanh_over_x_sech_exp, tanh_over_x_sech_exp_symbolic};
use hypint::{Float, PrecisionContext};

fn main() -> hypint::Result<()> {
    let mut args = std::env::args().skip(1);
    let l: u32 = args.next().and_then(|a| a.parse().ok()).unwrap_or(2);
    let t_max: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(6);
    let ctx = PrecisionContext::new(128)?;
    for t in 0..=t_max {
        let c = tanh_over_x_sech_exp_symbolic(l, t)?;
        let v = c.evaluate(&ctx)?;
        let w = tanh_over_x_sech_exp(l, &ctx.real(t), &ctx)?;
        let err = Float::with_val(ctx.prec(), &v - &w).abs();
        println!("T = {t}: {c}");
        println!("       = {}  (continuous form differs by {:.1e})", v.to_string_radix(10, Some(30)), err.to_f64());
    }
    Ok(())
}

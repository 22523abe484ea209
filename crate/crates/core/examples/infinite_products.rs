//! Truncated products for β(2), ζ'(-1) and f(s) against the closed values.
//!
//! cargo run --release --example infinite_products

use hypint::closed::{infinite_product_beta2, infinite_product_zdot};
use hypint::hiprec::{f_closed, f_product_partial, Constants};
use hypint::{Float, PrecisionContext};

fn main() -> hypint::Result<()> {
    let ctx = PrecisionContext::new(128)?;
    let c = Constants::at(&ctx)?;
    let gap = |a: &Float, b: &Float| Float::with_val(ctx.prec(), a - b).abs().to_f64();
    println!("{:>8} {:>12} {:>12} {:>12}", "terms", "β(2)", "ζ'(-1)", "f(1/2)");
    let half = ctx.real(0.5);
    let f_half = f_closed(&half, &ctx)?;
    for terms in [10u64, 100, 1000, 10_000, 100_000] {
        let b = infinite_product_beta2(terms, &ctx)?;
        let z = infinite_product_zdot(terms, &ctx)?;
        let f = f_product_partial(&half, terms, &ctx)?;
        println!(
            "{terms:>8} {:>12.3e} {:>12.3e} {:>12.3e}",
            gap(&b, &c.beta2),
            gap(&z, &c.zeta_dot_m1),
            gap(&f, &f_half)
        );
    }
    Ok(())
}

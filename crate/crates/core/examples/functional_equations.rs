//! The eight polylog-weighted identities at a few values of s.
//!
//! cargo run --release --example functional_equations [bits]

use hypint::suite::verify_functional_equation;
use hypint::PrecisionContext;

fn main() -> hypint::Result<()> {
    let bits = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(128);
    let ctx = PrecisionContext::new(bits)?;
    println!("{:>3} {:>6} {:>14} {:>14}  status", "id", "s", "abs_err", "tolerance");
    for id in 1..=8 {
        for s in [0.5, 1.0, 2.5, 4.0] {
            let c = verify_functional_equation(id, &ctx.real(s), &ctx)?;
            println!("{id:>3} {s:>6} {:>14} {:>14}  {:?}", c.abs_err, c.tolerance, c.status);
            if let Some(n) = &c.note {
                println!("      {n}");
            }
        }
    }
    Ok(())
}

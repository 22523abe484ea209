//! Run a certification suite and print a one-line summary per case id.
//!
//! cargo run --release --example certify [suite] [bits] [seed]

use std::collections::BTreeMap;

use hypint::suite::{run_suite, Status};
use hypint::PrecisionContext;

fn main() -> hypint::Result<()> {
    let mut args = std::env::args().skip(1);
    let suite = args.next().unwrap_or_else(|| "all".into());
    let bits = args.next().and_then(|a| a.parse().ok()).unwrap_or(128);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(42);
    let ctx = PrecisionContext::new(bits)?;
    let report = run_suite(&suite, None, seed, &ctx)?;

    let mut by_id: BTreeMap<&str, (usize, usize, usize, f64)> = BTreeMap::new();
    for c in &report.cases {
        let e = by_id.entry(&c.id).or_default();
        match c.status {
            Status::Pass => e.0 += 1,
            Status::Fail => e.1 += 1,
            Status::Skipped => e.2 += 1,
        }
        if let Ok(a) = c.abs_err.parse::<f64>() {
            e.3 = e.3.max(a);
        }
    }
    println!("{:<28} {:>5} {:>5} {:>5} {:>12}", "id", "pass", "fail", "skip", "max abs_err");
    for (id, (p, f, s, m)) in by_id {
        println!("{id:<28} {p:>5} {f:>5} {s:>5} {m:>12.3e}");
    }
    for c in report.failures() {
        println!("FAIL {} {:?} abs={} tol={} {}", c.id, c.params, c.abs_err, c.tolerance, c.note.as_deref().unwrap_or(""));
    }
    println!(
        "suite {} at {} bits, seed {}: {} pass, {} fail, {} skipped in {:.1}s",
        report.suite, report.precision_bits, report.seed, report.summary.pass, report.summary.fail, report.summary.skipped, report.wall_time
    );
    Ok(())
}

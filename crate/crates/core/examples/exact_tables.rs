//! Builds the coefficient tables, prints the first rows and checks that the
//! explicit and recursive constructions agree.
//!
//! cargo run --release --example exact_tables [n_max]

use hypint::exact::tables::{
    is_identity, multiply_lower, sech_deriv_explicit, sech_deriv_recurrence, tanh_deriv_explicit,
    tanh_deriv_recurrence,
};
use hypint::exact::{bernoulli, euler_number, normalized_matrices, table, CoeffTable, TableKind};

fn show(t: &CoeffTable, rows: u32) {
    let mut last = None;
    for (n, _, v) in t.entries() {
        if n > rows {
            break;
        }
        if last != Some(n) {
            if last.is_some() {
                println!();
            }
            print!("  {n:>2}:");
            last = Some(n);
        }
        print!(" {v}");
    }
    println!();
}

fn main() -> hypint::Result<()> {
    let n_max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    for kind in [TableKind::G, TableKind::H, TableKind::C, TableKind::D] {
        println!("{kind} table, rows up to 5:");
        show(&table(kind, n_max)?, 5);
    }
    println!("d_4 reduction table:");
    show(&table(TableKind::DN(4), 4)?, 4);

    let m = normalized_matrices(n_max)?;
    println!("u·v = I: {}", is_identity(&multiply_lower(&m.u, &m.v)));
    println!("x·y = I: {}", is_identity(&multiply_lower(&m.x, &m.y)));
    println!("c explicit = recurrence: {}", sech_deriv_explicit(n_max) == sech_deriv_recurrence(n_max));
    println!("d explicit = recurrence: {}", tanh_deriv_explicit(n_max) == tanh_deriv_recurrence(n_max));

    println!("Bernoulli B_0..B_12: {}", (0..=12).map(|n| bernoulli(n).to_string()).collect::<Vec<_>>().join(" "));
    println!("Euler E_0..E_12: {}", (0..=12).map(|n| euler_number(n).to_string()).collect::<Vec<_>>().join(" "));
    Ok(())
}

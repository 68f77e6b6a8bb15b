//! Exhaustive strong-Gelfand classification of B_2 and B_3 over the full
//! subgroup lattice, with fast-path cross-checking.
//!
//!     cargo run --release --example classify_small

use hyperoct::char_oracle::Oracle;
use hyperoct::classifier::{enumerate_strong_gelfand, Budgets, Method};

fn main() {
    let oracle = Oracle::default();
    let budgets = Budgets::default();
    for n in [2u32, 3] {
        let report = enumerate_strong_gelfand(n, Method::Both, &budgets, &oracle).unwrap();
        println!(
            "B_{n}: {} subgroup classes ({} raw subgroups), {} strong Gelfand classes ({} raw):",
            report.counts.total,
            report.counts.total_raw,
            report.counts.strong_gelfand,
            report.counts.strong_gelfand_raw,
        );
        for row in report.rows.iter().filter(|r| r.strong_gelfand) {
            println!(
                "  order {:>3} x{:<2} {}",
                row.order,
                row.class_size,
                row.descriptor.as_deref().unwrap_or("(unnamed class)")
            );
        }
        println!();
    }
}

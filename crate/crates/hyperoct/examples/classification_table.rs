//! The classification table of strong Gelfand subgroups of B_n,
//! instantiated at concrete n: all rows at an odd and an even index, with
//! the parity-conditioned rows switching on and off.
//!
//!     cargo run --example classification_table

use hyperoct::classifier::instantiate_table1;

fn main() {
    for n in [8u32, 9] {
        let rows = instantiate_table1(n).unwrap();
        println!("strong Gelfand subgroups of B_{n} ({} rows):", rows.len());
        for (decision, sub) in &rows {
            let order = sub
                .descriptor
                .as_ref()
                .and_then(|d| d.order_formula(2))
                .expect("table rows have symbolic orders");
            println!("  {:42} order {:>12}", decision.descriptor, order.to_string());
        }
        println!();
    }
}

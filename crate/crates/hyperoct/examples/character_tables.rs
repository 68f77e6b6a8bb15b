//! Exact character tables: the modular oracle computes residue tables for
//! any materialised subgroup; for full wreath products the rows are matched
//! to partition-pair labels and lifted to exact integers.
//!
//!     cargo run --example character_tables

use hyperoct::char_oracle::{match_bn_rows, signed_classes_of_table, Oracle};
use hyperoct::groups::descriptor::{make_subgroup, SubgroupDescriptor as D};

const BUDGET: u64 = 1 << 21;

fn main() {
    let oracle = Oracle::default();

    // The order-8 group B_2, labelled and lifted.
    let b2 = make_subgroup(&D::Full(2), 2).unwrap().to_perm_group(BUDGET).unwrap();
    let table = oracle.character_table(&b2).unwrap();
    let labels = match_bn_rows(&table, 2).unwrap();
    let classes = signed_classes_of_table(&table, 2).unwrap();
    println!("B_2 character table (prime {}):", table.prime);
    print!("{:>16}", "");
    for c in &classes {
        print!("{:>12}", c.to_string());
    }
    println!();
    for (i, label) in labels.iter().enumerate() {
        print!("chi^{:>12}", label.to_string());
        for v in &table.rows[i] {
            print!("{:>12}", table.lift(*v));
        }
        println!();
    }

    // An unlabelled subgroup: the Klein four-group D_2 inside B_2.
    let d2 = make_subgroup(&D::Dn(2), 2).unwrap().to_perm_group(BUDGET).unwrap();
    let table = oracle.character_table(&d2).unwrap();
    println!("\nD_2 (order {}): degrees {:?}, rows as residues mod {}:", d2.order(), table.degrees, table.prime);
    for row in &table.rows {
        println!("  {row:?}");
    }

    // Degrees of B_4: the squares sum to the group order.
    let b4 = make_subgroup(&D::Full(4), 2).unwrap().to_perm_group(BUDGET).unwrap();
    let table = oracle.character_table(&b4).unwrap();
    let sq: u64 = table.degrees.iter().map(|d| d * d).sum();
    println!("\nB_4 degrees: {:?} (squares sum to {sq})", table.degrees);
}

//! Branching rules for hyperoctahedral groups: inducing a labelled
//! irreducible up one or two coordinates.
//!
//!     cargo run --example branching_rules

use hyperoct::bn_theory::{
    branch_up_b1, branch_up_b2, branch_up_sub2, dim_bn, B1Factor, B2SubIrrep, BnIrrepLabel,
};
use hyperoct::combinatorics::Partition;
use num_bigint::BigUint;

fn label(l: &[u32], m: &[u32]) -> BnIrrepLabel {
    BnIrrepLabel::new(Partition::new(l.to_vec()).unwrap(), Partition::new(m.to_vec()).unwrap())
}

fn main() {
    // One coordinate up: B_3 -> B_4, tensoring with the three possible
    // factors on the new coordinate.
    let base = label(&[2], &[1]);
    println!("inducing S^{base} from B_3 x B_1 to B_4:");
    for (name, factor) in [
        ("trivial factor    ", B1Factor::PosOne),
        ("flip-sign factor  ", B1Factor::NegOne),
        ("passive S_1 factor", B1Factor::PassiveS1),
    ] {
        let out = branch_up_b1(&base, factor);
        let pretty: Vec<String> = out.keys().map(|l| l.to_string()).collect();
        println!("  {name}:  {}", pretty.join(" + "));
    }

    // Two coordinates up, against each of the five B_2 irreducibles. The
    // index-times-dimension bookkeeping is exact.
    println!("\ninducing S^{base} from B_3 x B_2 to B_5:");
    let index = BigUint::from(10u32); // [B_5 : B_3 x B_2]
    for w in hyperoct::bn_theory::all_labels(2) {
        let out = branch_up_b2(&base, &w).unwrap();
        let total: BigUint = out.iter().map(|(l, &m)| dim_bn(l) * BigUint::from(m)).sum();
        assert_eq!(total, &index * dim_bn(&base) * dim_bn(&w));
        let pretty: Vec<String> = out.keys().map(|l| l.to_string()).collect();
        println!("  x S^{w}:  {}", pretty.join(" + "));
    }

    // The order-2 passive factor inside B_2 induces three families at once.
    println!("\ninducing S^{base} from B_3 x (passive S_2) to B_5:");
    for (name, w) in [
        ("trivial", B2SubIrrep::S2barTrivial),
        ("sign   ", B2SubIrrep::S2barSign),
    ] {
        let out = branch_up_sub2(&base, w).unwrap();
        let pretty: Vec<String> = out.keys().map(|l| l.to_string()).collect();
        println!("  {name}:  {}", pretty.join(" + "));
    }
}

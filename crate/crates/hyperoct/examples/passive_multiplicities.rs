//! Multiplicities of wreath irreducibles in inductions from the passive
//! symmetric factor, via iterated Littlewood-Richardson products.
//!
//!     cargo run --example passive_multiplicities

use hyperoct::bn_theory::{passive_induction_mult, AbelianWreathLabel};
use hyperoct::combinatorics::{lr_coefficient, partitions_of, Partition};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn main() {
    // Inducing the Specht module S^(4,3,2,1) of the passive S_10 up to
    // B_10: the label with blocks ((3,2,1); (3,1)) appears three times,
    // matching the count of Littlewood-Richardson tableaux of shape
    // (4,3,2,1)/(3,2,1) and weight (3,1).
    let w = p(&[4, 3, 2, 1]);
    let u = AbelianWreathLabel::new(2, vec![p(&[3, 2, 1]), p(&[3, 1])]).unwrap();
    println!(
        "multiplicity of {u:?} in ind S^{w} from the passive S_10: {}",
        passive_induction_mult(&w, &u).unwrap()
    );
    println!(
        "LR coefficient c^(4,3,2,1)_((3,2,1),(3,1)) = {}",
        lr_coefficient(&p(&[4, 3, 2, 1]), &p(&[3, 2, 1]), &p(&[3, 1]))
    );

    // The full decomposition of ind S^(3) from the passive S_3 to a
    // (Z/3) wr S_3: one block per residue.
    println!("\ndecomposition of ind S^(3) from passive S_3 into (Z/3) wr S_3 labels:");
    let w = p(&[3]);
    for label in AbelianWreathLabel::all(3, 3) {
        let m = passive_induction_mult(&w, &label).unwrap();
        if m != 0u32.into() {
            println!("  {label:?}  x{m}");
        }
    }

    // Every Specht module of S_6 restricted... rather, induced into B_6:
    // which labels pick up multiplicity at least 2 (the witnesses that the
    // passive factor stops being a strong Gelfand subgroup at n = 6).
    println!("\nlabels appearing with multiplicity >= 2 in inductions from the passive S_6:");
    for w in partitions_of(6) {
        for k in 0..=6u32 {
            for lam in partitions_of(6 - k) {
                for mu in partitions_of(k) {
                    let u = AbelianWreathLabel::new(2, vec![lam.clone(), mu]).unwrap();
                    let m = passive_induction_mult(&w, &u).unwrap();
                    if m >= 2u32.into() {
                        println!("  ind S^{w} contains {u:?} with multiplicity {m}");
                    }
                }
            }
        }
    }
}

//! Full subgroup lattices of small groups, up to conjugacy.
//!
//!     cargo run --release --example subgroup_lattice

use hyperoct::groups::descriptor::{make_subgroup, SubgroupDescriptor as D};
use hyperoct::groups::lattice::{subgroups_up_to_conjugacy, total_subgroups};
use hyperoct::groups::PermGroup;

const BUDGET: u64 = 1 << 21;

fn main() {
    // B_2: ten subgroups in eight conjugacy classes.
    let b2 = make_subgroup(&D::Full(2), 2).unwrap().to_perm_group(BUDGET).unwrap();
    let classes = subgroups_up_to_conjugacy(&b2, 100_000).unwrap();
    println!(
        "B_2 has {} subgroups in {} conjugacy classes:",
        total_subgroups(&classes),
        classes.len()
    );
    for class in &classes {
        println!("  order {:>2}, {} conjugate(s)", class.order(), class.class_size);
    }

    // S_4 as a sanity case: 30 subgroups in 11 classes.
    let s4 = PermGroup::symmetric(4, BUDGET).unwrap();
    let classes = subgroups_up_to_conjugacy(&s4, 100_000).unwrap();
    println!(
        "\nS_4 has {} subgroups in {} conjugacy classes",
        total_subgroups(&classes),
        classes.len()
    );

    // B_3: the classification target at desk scale.
    let b3 = make_subgroup(&D::Full(3), 2).unwrap().to_perm_group(BUDGET).unwrap();
    let classes = subgroups_up_to_conjugacy(&b3, 100_000).unwrap();
    let by_order: std::collections::BTreeMap<u64, usize> =
        classes.iter().fold(Default::default(), |mut acc, c| {
            *acc.entry(c.order()).or_default() += 1;
            acc
        });
    println!(
        "\nB_3 has {} subgroups in {} conjugacy classes; classes by order: {:?}",
        total_subgroups(&classes),
        classes.len(),
        by_order
    );
}

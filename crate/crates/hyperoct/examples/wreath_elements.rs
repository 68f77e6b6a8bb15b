//! Working with explicit wreath elements: the group law, the block
//! embedding into a symmetric group, signed cycle types, projections and
//! the m_K invariant.
//!
//!     cargo run --example wreath_elements

use hyperoct::groups::descriptor::{make_subgroup, SubgroupDescriptor as D};
use hyperoct::groups::{are_conjugate, Perm, WreathElement};

const BUDGET: u64 = 1 << 21;

fn main() {
    // (f, sigma) arithmetic in B_3.
    let t = WreathElement::basis_flip(2, 3, 1, 1).unwrap();
    let s1 = WreathElement::passive(2, Perm::from_cycles(3, &[&[0, 1]]).unwrap());
    let x = t.group_op(&s1).unwrap();
    println!("t * s1 = {x:?}  (order {})", {
        let mut k = 1;
        let mut acc = x.clone();
        while !acc.is_identity() {
            acc = acc.group_op(&x).unwrap();
            k += 1;
        }
        k
    });
    println!("embedded in S_6: {:?}", x.embed_sym().images());
    println!("signed cycle type: {}", x.signed_cycle_type().unwrap());

    // Projection data of the classified families at n = 4.
    println!("\nprojection image order and m_K for subgroups of B_4:");
    for d in [D::Full(4), D::Dn(4), D::Jn(4), D::DiagFSn(4), D::PassiveSn(4), D::Yn(4)] {
        let k = make_subgroup(&d, 2).unwrap();
        let gamma = k.gamma(BUDGET).unwrap();
        let m = k.m_value(BUDGET).unwrap();
        println!(
            "  {:10} |K| = {:>3}, |gamma_K| = {:>2}, m_K = {}",
            d.to_string(),
            k.order(BUDGET).unwrap(),
            gamma.order(),
            m.map(|v| v.to_string()).unwrap_or_else(|| "absent".into()),
        );
    }

    // The two passive copies of S_2 in B_2 are conjugate.
    let amb = make_subgroup(&D::Full(2), 2).unwrap();
    let s2 = make_subgroup(&D::PassiveSn(2), 2).unwrap();
    let y2 = make_subgroup(&D::Yn(2), 2).unwrap();
    println!(
        "\npassive S_2 conjugate to its twisted copy in B_2: {}",
        are_conjugate(&s2, &y2, &amb, BUDGET).unwrap()
    );

    // Component projections of a fiber-product subgroup of B_5 = B_3 x B_2.
    let d = D::FiberProduct(
        Box::new(D::Full(3)),
        hyperoct::groups::CharName::Delta,
        Box::new(D::Full(2)),
        hyperoct::groups::CharName::Delta,
    );
    let k = make_subgroup(&d, 2).unwrap();
    let (alpha, beta) = k.lambda_split(2, BUDGET).unwrap();
    let l = k.aux_l(2, BUDGET).unwrap();
    println!(
        "\n{}: |K| = {}, |Lambda_alpha| = {}, |Lambda_beta| = {}, |L| = {}",
        d.to_string(),
        k.order(BUDGET).unwrap(),
        alpha.order(BUDGET).unwrap(),
        beta.order(BUDGET).unwrap(),
        l.order(BUDGET).unwrap(),
    );
}

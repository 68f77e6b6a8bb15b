//! Property-based invariants over randomly generated partitions, labels and
//! wreath elements.

use proptest::prelude::*;

use hyperoct::bn_theory::{bn_char_value, dim_bn, twist, BnIrrepLabel, LinearChar, SignedClass};
use hyperoct::combinatorics::{
    dimension_sym, lr_coefficient, partitions_of, Partition, StripOrientation,
};
use hyperoct::groups::{Perm, WreathElement};
use num_bigint::BigInt;

fn arb_partition(max_size: u32) -> impl Strategy<Value = Partition> {
    (0..=max_size)
        .prop_flat_map(move |n| {
            let all = partitions_of(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
}

fn arb_wreath(r: u32, n: usize) -> impl Strategy<Value = WreathElement> {
    let sigma = Just((0..n as u8).collect::<Vec<u8>>())
        .prop_shuffle()
        .prop_map(|images| Perm::from_images(images).expect("a shuffle is a permutation"));
    let flips = proptest::collection::vec(0..r as u8, n);
    (flips, sigma).prop_map(move |(f, s)| WreathElement::new(r, f, s).expect("valid"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_involutive(p in arb_partition(14)) {
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn strips_are_contained_and_sized(p in arb_partition(8)) {
        for o in [StripOrientation::Horizontal, StripOrientation::Vertical] {
            for q in p.add_strip(2, o) {
                prop_assert!(p.contained_in(&q));
                prop_assert_eq!(q.size(), p.size() + 2);
            }
        }
    }

    #[test]
    fn lr_symmetry_random(a in arb_partition(5), b in arb_partition(5)) {
        for nu in partitions_of(a.size() + b.size()) {
            prop_assert_eq!(lr_coefficient(&nu, &a, &b), lr_coefficient(&nu, &b, &a));
        }
    }

    #[test]
    fn twist_is_a_klein_action(a in arb_partition(4), b in arb_partition(4)) {
        use LinearChar::*;
        let label = BnIrrepLabel::new(a, b);
        for x in [One, Eps, Delta, EpsDelta] {
            for y in [One, Eps, Delta, EpsDelta] {
                prop_assert_eq!(
                    twist(&twist(&label, x), y),
                    twist(&label, x.compose(y))
                );
            }
        }
        // Twisting never changes the dimension.
        for x in [Eps, Delta, EpsDelta] {
            prop_assert_eq!(dim_bn(&twist(&label, x)), dim_bn(&label));
        }
    }

    #[test]
    fn group_law_associativity(
        x in arb_wreath(3, 5),
        y in arb_wreath(3, 5),
        z in arb_wreath(3, 5),
    ) {
        let a = x.group_op(&y).unwrap().group_op(&z).unwrap();
        let b = x.group_op(&y.group_op(&z).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn inverses_and_embedding(x in arb_wreath(3, 5), y in arb_wreath(3, 5)) {
        prop_assert!(x.group_op(&x.inverse()).unwrap().is_identity());
        // The block embedding is a homomorphism.
        prop_assert_eq!(
            x.group_op(&y).unwrap().embed_sym(),
            x.embed_sym().compose(&y.embed_sym())
        );
        // Round trip through the embedding.
        let back = WreathElement::from_embedded(3, 5, &x.embed_sym()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn signed_type_conjugation_invariant(x in arb_wreath(2, 5), y in arb_wreath(2, 5)) {
        let conj = y.group_op(&x).unwrap().group_op(&y.inverse()).unwrap();
        prop_assert_eq!(
            x.signed_cycle_type().unwrap(),
            conj.signed_cycle_type().unwrap()
        );
    }

    #[test]
    fn character_bounded_by_dimension(a in arb_partition(3), b in arb_partition(3)) {
        let label = BnIrrepLabel::new(a, b);
        let n = label.n();
        let dim = BigInt::from(dim_bn(&label));
        for k in 0..=n {
            for pos in partitions_of(n - k) {
                for neg in partitions_of(k) {
                    let cls = SignedClass::new(pos.clone(), neg);
                    let v = bn_char_value(&label, &cls).unwrap();
                    prop_assert!(v.magnitude() <= dim.magnitude());
                }
            }
        }
    }

    #[test]
    fn hook_dimension_matches_tableau_count(p in arb_partition(7)) {
        // Independent oracle: count standard tableaux by direct
        // enumeration (add cells in increasing label order).
        fn count(shape: &Partition, partial: &mut Vec<u32>, placed: u32) -> u64 {
            if placed == shape.size() {
                return 1;
            }
            let mut total = 0;
            for row in 0..shape.len() {
                let filled = partial[row];
                let above = if row == 0 { u32::MAX } else { partial[row - 1] };
                if filled < shape.part(row) && filled < above {
                    partial[row] += 1;
                    total += count(shape, partial, placed + 1);
                    partial[row] -= 1;
                }
            }
            total
        }
        let mut partial = vec![0u32; p.len()];
        let brute = count(&p, &mut partial, 0);
        prop_assert_eq!(dimension_sym(&p), brute.into());
    }
}

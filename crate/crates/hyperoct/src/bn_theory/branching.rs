//! Pieri-style branching rules: inductions into `B_n` from `B_{n-1} x B_1`,
//! `B_{n-1} x S_1`, `B_{n-2} x B_2`, and from `B_{n-2} x G` for `G` one of
//! `D_2`, `H_2`, `S_2-bar`.

use std::collections::BTreeMap;

use crate::bn_theory::label::{check_b2_label, BnIrrepLabel};
use crate::combinatorics::StripOrientation;
use crate::{Error, Result};

/// Multiset of induced constituents, sorted in the canonical label order.
pub type LabelMultiset = BTreeMap<BnIrrepLabel, u64>;

fn add_all(out: &mut LabelMultiset, labels: impl IntoIterator<Item = BnIrrepLabel>) {
    for l in labels {
        *out.entry(l).or_insert(0) += 1;
    }
}

fn grow_lambda(label: &BnIrrepLabel, k: u32, o: StripOrientation) -> Vec<BnIrrepLabel> {
    label
        .lambda
        .add_strip(k, o)
        .into_iter()
        .map(|tau| BnIrrepLabel::new(tau, label.mu.clone()))
        .collect()
}

fn grow_mu(label: &BnIrrepLabel, k: u32, o: StripOrientation) -> Vec<BnIrrepLabel> {
    label
        .mu
        .add_strip(k, o)
        .into_iter()
        .map(|rho| BnIrrepLabel::new(label.lambda.clone(), rho))
        .collect()
}

fn grow_both(label: &BnIrrepLabel) -> Vec<BnIrrepLabel> {
    let mut out = Vec::new();
    for tau in label.lambda.add_strip(1, StripOrientation::Horizontal) {
        for rho in label.mu.add_strip(1, StripOrientation::Horizontal) {
            out.push(BnIrrepLabel::new(tau.clone(), rho));
        }
    }
    out
}

/// The `B_1`-side factor when inducing from `B_{n-1}`: the trivial or
/// flip-sign character of `B_1`, or the trivial character of the passive
/// `S_1` (which induces both).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum B1Factor {
    PosOne,
    NegOne,
    PassiveS1,
}

/// Decomposition of `ind` from `B_{n-1} x B_1` (or `B_{n-1} x S_1`) to `B_n`
/// of `S^{lambda,mu}` tensored with the chosen factor: one box grows on
/// `lambda` (trivial factor), on `mu` (flip-sign factor), or on either
/// (passive `S_1`). Every summand has multiplicity 1.
pub fn branch_up_b1(label: &BnIrrepLabel, factor: B1Factor) -> LabelMultiset {
    let mut out = LabelMultiset::new();
    match factor {
        B1Factor::PosOne => add_all(&mut out, grow_lambda(label, 1, StripOrientation::Horizontal)),
        B1Factor::NegOne => add_all(&mut out, grow_mu(label, 1, StripOrientation::Horizontal)),
        B1Factor::PassiveS1 => {
            add_all(&mut out, grow_lambda(label, 1, StripOrientation::Horizontal));
            add_all(&mut out, grow_mu(label, 1, StripOrientation::Horizontal));
        }
    }
    out
}

/// Decomposition of `ind` from `B_{n-2} x B_2` to `B_n` of `S^{lambda,mu}`
/// tensored with the `B_2` irreducible `w`; the five cases add a horizontal
/// or vertical 2-strip to one side, or one box to each side.
pub fn branch_up_b2(label: &BnIrrepLabel, w: &BnIrrepLabel) -> Result<LabelMultiset> {
    check_b2_label(w)?;
    let mut out = LabelMultiset::new();
    match (w.lambda.parts(), w.mu.parts()) {
        ([2], []) => add_all(&mut out, grow_lambda(label, 2, StripOrientation::Horizontal)),
        ([1, 1], []) => add_all(&mut out, grow_lambda(label, 2, StripOrientation::Vertical)),
        ([1], [1]) => add_all(&mut out, grow_both(label)),
        ([], [1, 1]) => add_all(&mut out, grow_mu(label, 2, StripOrientation::Vertical)),
        ([], [2]) => add_all(&mut out, grow_mu(label, 2, StripOrientation::Horizontal)),
        _ => unreachable!("n = 2 labels are exactly the five matched shapes"),
    }
    Ok(out)
}

/// An irreducible of one of the small factor subgroups of `B_2` used in the
/// `B_{n-2} x G` branching corollaries.
///
/// For `D_2` and `H_2` the index is `0..=3`, numbered so that restriction
/// from `B_2` gives: `V0 = res S^{(2),0}`, and
///
/// * `D_2`: `V1 = res S^{(1,1),0}`, `V2 + V3 = res S^{(1),(1)}`;
/// * `H_2`: `V2 = res S^{(1,1),0}`, `V1 + V3 = res S^{(1),(1)}`.
///
/// `S_2-bar` has the trivial and sign characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum B2SubIrrep {
    D2(u8),
    H2(u8),
    S2barTrivial,
    S2barSign,
}

/// Decomposition of `ind` from `B_{n-2} x G` to `B_n` of `S^{lambda,mu}`
/// tensored with the irreducible `w` of `G`, for `G` one of `D_2`, `H_2`,
/// `S_2-bar`. Each case is the union over the `B_2` constituents of
/// `ind^{B_2}_G w` of the corresponding `branch_up_b2` family.
pub fn branch_up_sub2(label: &BnIrrepLabel, w: B2SubIrrep) -> Result<LabelMultiset> {
    use StripOrientation::{Horizontal, Vertical};
    let mut out = LabelMultiset::new();
    match w {
        B2SubIrrep::D2(0) => {
            add_all(&mut out, grow_lambda(label, 2, Horizontal));
            add_all(&mut out, grow_mu(label, 2, Horizontal));
        }
        B2SubIrrep::D2(1) => {
            add_all(&mut out, grow_lambda(label, 2, Vertical));
            add_all(&mut out, grow_mu(label, 2, Vertical));
        }
        B2SubIrrep::D2(2) | B2SubIrrep::D2(3) => add_all(&mut out, grow_both(label)),
        B2SubIrrep::H2(0) => {
            add_all(&mut out, grow_lambda(label, 2, Horizontal));
            add_all(&mut out, grow_mu(label, 2, Vertical));
        }
        B2SubIrrep::H2(2) => {
            add_all(&mut out, grow_lambda(label, 2, Vertical));
            add_all(&mut out, grow_mu(label, 2, Horizontal));
        }
        B2SubIrrep::H2(1) | B2SubIrrep::H2(3) => add_all(&mut out, grow_both(label)),
        B2SubIrrep::S2barTrivial => {
            add_all(&mut out, grow_lambda(label, 2, Horizontal));
            add_all(&mut out, grow_mu(label, 2, Horizontal));
            add_all(&mut out, grow_both(label));
        }
        B2SubIrrep::S2barSign => {
            add_all(&mut out, grow_lambda(label, 2, Vertical));
            add_all(&mut out, grow_mu(label, 2, Vertical));
            add_all(&mut out, grow_both(label));
        }
        B2SubIrrep::D2(i) | B2SubIrrep::H2(i) => {
            return Err(Error::InvalidArgument(format!(
                "irreducible index {i} out of range for an order-4 subgroup of B_2"
            )))
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bn_theory::{all_labels, dim_bn};
    use crate::combinatorics::Partition;
    use num_bigint::BigUint;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn lbl(l: &[u32], m: &[u32]) -> BnIrrepLabel {
        BnIrrepLabel::new(p(l), p(m))
    }

    fn set(pairs: &[(&[u32], &[u32])]) -> LabelMultiset {
        pairs.iter().map(|(l, m)| (lbl(l, m), 1)).collect()
    }

    #[test]
    fn b1_examples() {
        assert_eq!(
            branch_up_b1(&lbl(&[1], &[1]), B1Factor::PosOne),
            set(&[(&[2], &[1]), (&[1, 1], &[1])])
        );
        assert_eq!(
            branch_up_b1(&lbl(&[], &[1]), B1Factor::NegOne),
            set(&[(&[], &[2]), (&[], &[1, 1])])
        );
        assert_eq!(
            branch_up_b1(&lbl(&[1], &[1]), B1Factor::PassiveS1).len(),
            4
        );
    }

    #[test]
    fn b2_examples() {
        assert_eq!(
            branch_up_b2(&lbl(&[], &[1]), &lbl(&[], &[2])).unwrap(),
            set(&[(&[], &[3]), (&[], &[2, 1])])
        );
        assert_eq!(
            branch_up_b2(&lbl(&[1], &[1]), &lbl(&[1], &[1])).unwrap(),
            set(&[
                (&[2], &[2]),
                (&[2], &[1, 1]),
                (&[1, 1], &[2]),
                (&[1, 1], &[1, 1])
            ])
        );
        assert_eq!(
            branch_up_b2(&lbl(&[2], &[]), &lbl(&[2], &[])).unwrap(),
            set(&[(&[4], &[]), (&[3, 1], &[]), (&[2, 2], &[])])
        );
        assert!(branch_up_b2(&lbl(&[1], &[]), &lbl(&[3], &[])).is_err());
    }

    #[test]
    fn sub2_examples() {
        // D_2 with ind W = S^{(1),(1)} matches the third B_2 case.
        assert_eq!(
            branch_up_sub2(&lbl(&[1], &[1]), B2SubIrrep::D2(2)).unwrap(),
            branch_up_b2(&lbl(&[1], &[1]), &lbl(&[1], &[1])).unwrap()
        );
        // H_2 with ind W = S^{(2),0} + S^{0,(1,1)} at ((1),0), n = 3.
        assert_eq!(
            branch_up_sub2(&lbl(&[1], &[]), B2SubIrrep::H2(0)).unwrap(),
            set(&[(&[3], &[]), (&[2, 1], &[]), (&[1], &[1, 1])])
        );
        // S_2-bar trivial at (0,(1)), n = 3.
        assert_eq!(
            branch_up_sub2(&lbl(&[], &[1]), B2SubIrrep::S2barTrivial).unwrap(),
            set(&[
                (&[2], &[1]),
                (&[], &[3]),
                (&[], &[2, 1]),
                (&[1], &[2]),
                (&[1], &[1, 1])
            ])
        );
        assert!(branch_up_sub2(&lbl(&[1], &[]), B2SubIrrep::D2(4)).is_err());
    }

    /// Index times input dimension equals the dimension sum of the output.
    #[test]
    fn dimension_bookkeeping() {
        for n in 2..=6u32 {
            let b2_labels = all_labels(2);
            for label in all_labels(n - 1) {
                let idx_b1 = BigUint::from(n);
                let idx_s1 = BigUint::from(2 * n);
                for (factor, idx) in [
                    (B1Factor::PosOne, &idx_b1),
                    (B1Factor::NegOne, &idx_b1),
                    (B1Factor::PassiveS1, &idx_s1),
                ] {
                    let total: BigUint = branch_up_b1(&label, factor)
                        .iter()
                        .map(|(l, &m)| dim_bn(l) * BigUint::from(m))
                        .sum();
                    assert_eq!(total, idx * dim_bn(&label), "{label} {factor:?}");
                }
            }
            if n < 2 {
                continue;
            }
            let idx_b2 = BigUint::from(n * (n - 1) / 2);
            for label in all_labels(n - 2) {
                for w in &b2_labels {
                    let total: BigUint = branch_up_b2(&label, w)
                        .unwrap()
                        .iter()
                        .map(|(l, &m)| dim_bn(l) * BigUint::from(m))
                        .sum();
                    let w_dim = dim_bn(w);
                    assert_eq!(total, &idx_b2 * dim_bn(&label) * w_dim, "{label} x {w}");
                }
                // order-4 subgroups: index 2 n(n-1)/2; S_2-bar: index 2 n(n-1).
                let idx4 = BigUint::from(n * (n - 1));
                let idx2 = BigUint::from(2 * n * (n - 1));
                let dim1 = BigUint::from(1u32);
                for (w, idx, wd) in [
                    (B2SubIrrep::D2(0), &idx4, &dim1),
                    (B2SubIrrep::D2(1), &idx4, &dim1),
                    (B2SubIrrep::D2(2), &idx4, &dim1),
                    (B2SubIrrep::D2(3), &idx4, &dim1),
                    (B2SubIrrep::H2(0), &idx4, &dim1),
                    (B2SubIrrep::H2(1), &idx4, &dim1),
                    (B2SubIrrep::H2(2), &idx4, &dim1),
                    (B2SubIrrep::H2(3), &idx4, &dim1),
                    (B2SubIrrep::S2barTrivial, &idx2, &dim1),
                    (B2SubIrrep::S2barSign, &idx2, &dim1),
                ] {
                    let total: BigUint = branch_up_sub2(&label, w)
                        .unwrap()
                        .iter()
                        .map(|(l, &m)| dim_bn(l) * BigUint::from(m))
                        .sum();
                    assert_eq!(total, idx * dim_bn(&label) * wd, "{label} {w:?}");
                }
            }
        }
    }
}

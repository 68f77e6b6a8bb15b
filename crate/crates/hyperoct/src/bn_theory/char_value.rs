//! Exact character values of `S^{lambda,mu}` on signed conjugacy classes.
//!
//! The value at the class with positive cycle type `alpha` and negative
//! cycle type `beta` is computed from the induced-character formula for the
//! inertia-group construction: distribute the cycles of `alpha` and `beta`
//! over the two sides of the label; the `(2i)`-factors of the signed
//! centralizers cancel, leaving binomial weights:
//!
//! `sum over splits  prod_i C(m_i(alpha), k_i) * prod_j C(m_j(beta), l_j)
//!   * chi^lambda(alpha1 u beta1) * (-1)^{#parts beta2} * chi^mu(alpha2 u beta2)`
//!
//! where side 1 must have total size `|lambda|`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::bn_theory::label::{BnIrrepLabel, SignedClass};
use crate::combinatorics::{partitions_of, sym_char_value, Partition};
use crate::{Error, Result};

/// Multiplicities of each distinct part value, largest part first.
fn part_multiplicities(p: &Partition) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = Vec::new();
    for &part in p.parts() {
        match out.last_mut() {
            Some((v, m)) if *v == part => *m += 1,
            _ => out.push((part, 1)),
        }
    }
    out
}

fn binomial(n: u32, k: u32) -> BigUint {
    let mut b = BigUint::one();
    for i in 0..k {
        b = b * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    b
}

/// All ways of choosing `k_i <= m_i` boxes from each multiplicity group,
/// reported as (chosen-parts-for-side-1, leftover-for-side-2, binomial
/// weight, side-1 size, side-2 part count is implicit).
struct Splitter {
    groups: Vec<(u32, u32)>,
}

impl Splitter {
    fn for_each(&self, mut f: impl FnMut(&[u32], &[u32], &BigUint, u32)) {
        let mut side1 = Vec::new();
        let mut side2 = Vec::new();
        let one = BigUint::one();
        rec(&self.groups, 0, &mut side1, &mut side2, &one, 0, &mut f);

        fn rec(
            groups: &[(u32, u32)],
            idx: usize,
            side1: &mut Vec<u32>,
            side2: &mut Vec<u32>,
            weight: &BigUint,
            size1: u32,
            f: &mut impl FnMut(&[u32], &[u32], &BigUint, u32),
        ) {
            if idx == groups.len() {
                f(side1, side2, weight, size1);
                return;
            }
            let (v, m) = groups[idx];
            for k in 0..=m {
                let w = weight * binomial(m, k);
                for _ in 0..k {
                    side1.push(v);
                }
                for _ in 0..(m - k) {
                    side2.push(v);
                }
                rec(groups, idx + 1, side1, side2, &w, size1 + k * v, f);
                side1.truncate(side1.len() - k as usize);
                side2.truncate(side2.len() - (m - k) as usize);
            }
        }
    }
}

/// Exact character value of `S^{lambda,mu}` at a signed class of the same
/// `n`. Reproduces the `B_2` table and matches the oracle row for small `n`.
pub fn bn_char_value(label: &BnIrrepLabel, cls: &SignedClass) -> Result<BigInt> {
    if label.n() != cls.n() {
        return Err(Error::SizeMismatch(format!(
            "label has n = {} but class has n = {}",
            label.n(),
            cls.n()
        )));
    }
    let a = label.lambda.size();
    let alpha_split = Splitter { groups: part_multiplicities(&cls.pos) };
    let beta_split = Splitter { groups: part_multiplicities(&cls.neg) };

    let mut total = BigInt::zero();
    alpha_split.for_each(|a1, a2, wa, size_a1| {
        beta_split.for_each(|b1, b2, wb, size_b1| {
            if size_a1 + size_b1 != a {
                return;
            }
            let mut side1: Vec<u32> = a1.to_vec();
            side1.extend_from_slice(b1);
            let mut side2: Vec<u32> = a2.to_vec();
            side2.extend_from_slice(b2);
            let t1 = Partition::from_unsorted(side1);
            let t2 = Partition::from_unsorted(side2);
            let c1 = sym_char_value(&label.lambda, &t1).expect("sizes match by construction");
            let c2 = sym_char_value(&label.mu, &t2).expect("sizes match by construction");
            let sign = if b2.len() % 2 == 0 { 1 } else { -1 };
            total += BigInt::from(wa * wb) * c1 * c2 * BigInt::from(sign);
        });
    });
    Ok(total)
}

/// All signed classes of `B_n`, sorted canonically.
pub fn signed_classes(n: u32) -> Vec<SignedClass> {
    let mut out = Vec::new();
    for k in 0..=n {
        for pos in partitions_of(n - k) {
            for neg in partitions_of(k) {
                out.push(SignedClass::new(pos.clone(), neg));
            }
        }
    }
    out.sort();
    out
}

/// Size of a signed class in `B_n`: group order `2^n n!` divided by the
/// centralizer order `prod_i (2i)^{m_i} m_i!` taken over both cycle types.
pub fn signed_class_size(cls: &SignedClass) -> BigUint {
    let n = cls.n();
    let mut order = BigUint::one();
    for k in 1..=n {
        order *= BigUint::from(2 * k);
    }
    let mut centralizer = BigUint::one();
    for p in [&cls.pos, &cls.neg] {
        for (v, m) in part_multiplicities(p) {
            for _ in 0..m {
                centralizer *= BigUint::from(2 * v);
            }
            for k in 1..=m {
                centralizer *= BigUint::from(k);
            }
        }
    }
    order / centralizer
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bn_theory::{all_labels, dim_bn};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn lbl(l: &[u32], m: &[u32]) -> BnIrrepLabel {
        BnIrrepLabel::new(p(l), p(m))
    }

    fn cls(pos: &[u32], neg: &[u32]) -> SignedClass {
        SignedClass::new(p(pos), p(neg))
    }

    #[test]
    fn b2_table_spot_values() {
        assert_eq!(bn_char_value(&lbl(&[1], &[1]), &cls(&[1, 1], &[])).unwrap(), 2.into());
        assert_eq!(bn_char_value(&lbl(&[1], &[1]), &cls(&[], &[1, 1])).unwrap(), (-2).into());
        assert_eq!(bn_char_value(&lbl(&[], &[2]), &cls(&[1], &[1])).unwrap(), (-1).into());
    }

    #[test]
    fn full_b2_table() {
        // Rows and columns of the order-8 table, exact.
        let rows = [
            (lbl(&[2], &[]), [1, 1, 1, 1, 1]),
            (lbl(&[1, 1], &[]), [1, -1, 1, 1, -1]),
            (lbl(&[1], &[1]), [2, 0, 0, -2, 0]),
            (lbl(&[], &[2]), [1, 1, -1, 1, -1]),
            (lbl(&[], &[1, 1]), [1, -1, -1, 1, 1]),
        ];
        let cols = [
            cls(&[1, 1], &[]),
            cls(&[2], &[]),
            cls(&[1], &[1]),
            cls(&[], &[1, 1]),
            cls(&[], &[2]),
        ];
        for (label, values) in rows {
            for (c, expected) in cols.iter().zip(values) {
                assert_eq!(
                    bn_char_value(&label, c).unwrap(),
                    expected.into(),
                    "{label} at {c}"
                );
            }
        }
    }

    #[test]
    fn identity_value_is_dimension() {
        for n in 0..=5u32 {
            let id = SignedClass::identity(n);
            for label in all_labels(n) {
                assert_eq!(
                    bn_char_value(&label, &id).unwrap(),
                    BigInt::from(dim_bn(&label)),
                    "{label}"
                );
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 0..=6u32 {
            let mut order = BigUint::one();
            for k in 1..=n {
                order *= BigUint::from(2 * k);
            }
            let total: BigUint = signed_classes(n).iter().map(signed_class_size).sum();
            assert_eq!(total, order);
        }
    }

    #[test]
    fn first_orthogonality() {
        for n in 1..=5u32 {
            let classes = signed_classes(n);
            let mut order = BigUint::one();
            for k in 1..=n {
                order *= BigUint::from(2 * k);
            }
            let labels = all_labels(n);
            for x in &labels {
                for y in &labels {
                    let mut acc = BigInt::zero();
                    for c in &classes {
                        acc += BigInt::from(signed_class_size(c))
                            * bn_char_value(x, c).unwrap()
                            * bn_char_value(y, c).unwrap();
                    }
                    let expected = if x == y {
                        BigInt::from(order.clone())
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(acc, expected, "n={n} x={x} y={y}");
                }
            }
        }
    }
}

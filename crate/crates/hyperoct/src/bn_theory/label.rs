//! Irreducible labels of `B_n`, linear characters, twists, dimensions and
//! Clifford splitting over the three index-2 kernels.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{dimension_sym, partitions_of, Partition};
use crate::{Error, Result};

/// Label `(lambda, mu)` of the `B_n` irreducible `S^{lambda,mu}`, with
/// `n = |lambda| + |mu|`. Serializes as `{"lambda":[...],"mu":[...]}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BnIrrepLabel {
    pub lambda: Partition,
    pub mu: Partition,
}

impl fmt::Debug for BnIrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S^({},{})", self.lambda, self.mu)
    }
}

impl fmt::Display for BnIrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lambda, self.mu)
    }
}

impl BnIrrepLabel {
    pub fn new(lambda: Partition, mu: Partition) -> Self {
        BnIrrepLabel { lambda, mu }
    }

    pub fn n(&self) -> u32 {
        self.lambda.size() + self.mu.size()
    }
}

/// Canonical label order: lambda-major, partitions compared by size then
/// reverse-lexicographically. Every multiset-valued result is sorted this way.
impl Ord for BnIrrepLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lambda
            .cmp(&other.lambda)
            .then_with(|| self.mu.cmp(&other.mu))
    }
}

impl PartialOrd for BnIrrepLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All `B_n` labels in canonical order.
pub fn all_labels(n: u32) -> Vec<BnIrrepLabel> {
    let mut out = Vec::new();
    for k in 0..=n {
        for lambda in partitions_of(n - k) {
            for mu in partitions_of(k) {
                out.push(BnIrrepLabel::new(lambda.clone(), mu));
            }
        }
    }
    out.sort();
    out
}

/// The Klein four-group of linear characters of `B_n`: `eps` is the sign of
/// the permutation part, `delta` the parity of the number of sign flips.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LinearChar {
    One,
    Eps,
    Delta,
    EpsDelta,
}

impl LinearChar {
    /// Group composition; `One` is the identity and every element squares to
    /// it.
    pub fn compose(self, other: LinearChar) -> LinearChar {
        use LinearChar::*;
        match (self, other) {
            (One, x) | (x, One) => x,
            (a, b) if a == b => One,
            (Eps, Delta) | (Delta, Eps) => EpsDelta,
            (Eps, EpsDelta) | (EpsDelta, Eps) => Delta,
            (Delta, EpsDelta) | (EpsDelta, Delta) => Eps,
            _ => unreachable!(),
        }
    }
}

/// Twist of a label by a linear character:
/// `delta . (lambda,mu) = (mu,lambda)`, `eps . (lambda,mu) = (lambda',mu')`,
/// `eps delta . (lambda,mu) = (mu',lambda')`.
pub fn twist(label: &BnIrrepLabel, chi: LinearChar) -> BnIrrepLabel {
    match chi {
        LinearChar::One => label.clone(),
        LinearChar::Delta => BnIrrepLabel::new(label.mu.clone(), label.lambda.clone()),
        LinearChar::Eps => BnIrrepLabel::new(label.lambda.conjugate(), label.mu.conjugate()),
        LinearChar::EpsDelta => BnIrrepLabel::new(label.mu.conjugate(), label.lambda.conjugate()),
    }
}

/// Dimension of `S^{lambda,mu}`: `binom(n, |mu|) * f^lambda * f^mu`.
pub fn dim_bn(label: &BnIrrepLabel) -> BigUint {
    let n = label.n();
    let k = label.mu.size();
    let mut binom = BigUint::one();
    for i in 0..k {
        binom = binom * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    binom * dimension_sym(&label.lambda) * dimension_sym(&label.mu)
}

/// The three index-2 kernels of `B_n`: `D_n = ker delta`,
/// `(Z/2) wr A_n = ker eps`, `H_n = ker(eps delta)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IndexTwoKernel {
    KerDelta,
    KerEps,
    KerEpsDelta,
}

impl IndexTwoKernel {
    pub fn cutting_character(self) -> LinearChar {
        match self {
            IndexTwoKernel::KerDelta => LinearChar::Delta,
            IndexTwoKernel::KerEps => LinearChar::Eps,
            IndexTwoKernel::KerEpsDelta => LinearChar::EpsDelta,
        }
    }
}

/// Result of restricting `S^{lambda,mu}` to an index-2 kernel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChiOrSplit {
    /// The restriction splits into two inequivalent irreducible halves.
    Splits,
    /// The restriction stays irreducible and the label's associate partner
    /// under the cutting character restricts to the same module.
    PairsWith(BnIrrepLabel),
}

/// Clifford behaviour of a label over an index-2 kernel: splits exactly when
/// the label is fixed by the cutting character's twist.
pub fn clifford_split(label: &BnIrrepLabel, sub: IndexTwoKernel) -> ChiOrSplit {
    let partner = twist(label, sub.cutting_character());
    if partner == *label {
        ChiOrSplit::Splits
    } else {
        ChiOrSplit::PairsWith(partner)
    }
}

/// A conjugacy class of `B_n`: partition of positive cycle lengths and
/// partition of negative cycle lengths. Serializes as
/// `{"pos":[...],"neg":[...]}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedClass {
    pub pos: Partition,
    pub neg: Partition,
}

impl fmt::Debug for SignedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.pos, self.neg)
    }
}

impl fmt::Display for SignedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.pos, self.neg)
    }
}

impl SignedClass {
    pub fn new(pos: Partition, neg: Partition) -> Self {
        SignedClass { pos, neg }
    }

    pub fn n(&self) -> u32 {
        self.pos.size() + self.neg.size()
    }

    pub fn identity(n: u32) -> Self {
        SignedClass {
            pos: Partition::new(vec![1; n as usize]).expect("all-ones is a partition"),
            neg: Partition::empty(),
        }
    }
}

/// Validates that a label is one of the five `B_2` labels.
pub(crate) fn check_b2_label(w: &BnIrrepLabel) -> Result<()> {
    if w.n() == 2 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "expected a B_2 irreducible label, got {w} with n = {}",
            w.n()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn lbl(l: &[u32], m: &[u32]) -> BnIrrepLabel {
        BnIrrepLabel::new(p(l), p(m))
    }

    #[test]
    fn twist_examples() {
        assert_eq!(twist(&lbl(&[2], &[1]), LinearChar::Delta), lbl(&[1], &[2]));
        assert_eq!(twist(&lbl(&[2], &[1]), LinearChar::EpsDelta), lbl(&[1], &[1, 1]));
        assert_eq!(twist(&lbl(&[3, 1], &[2]), LinearChar::One), lbl(&[3, 1], &[2]));
    }

    #[test]
    fn twist_klein_action() {
        use LinearChar::*;
        let chars = [One, Eps, Delta, EpsDelta];
        for n in 0..=6u32 {
            for label in all_labels(n) {
                for &a in &chars {
                    for &b in &chars {
                        assert_eq!(
                            twist(&twist(&label, a), b),
                            twist(&label, a.compose(b)),
                            "label {label} a {a:?} b {b:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn dims() {
        assert_eq!(dim_bn(&lbl(&[4], &[])), 1u32.into());
        assert_eq!(dim_bn(&lbl(&[1], &[1])), 2u32.into());
        assert_eq!(dim_bn(&lbl(&[3, 2, 1], &[3, 1])), 10080u32.into());
    }

    #[test]
    fn dim_squares_sum_to_group_order() {
        for n in 0..=6u32 {
            let mut order = BigUint::one();
            for k in 1..=n {
                order *= BigUint::from(2 * k);
            }
            let total: BigUint = all_labels(n)
                .iter()
                .map(|l| {
                    let d = dim_bn(l);
                    &d * &d
                })
                .sum();
            assert_eq!(total, order, "n = {n}");
        }
    }

    #[test]
    fn label_counts() {
        assert_eq!(all_labels(2).len(), 5);
        assert_eq!(all_labels(3).len(), 10);
        assert_eq!(all_labels(4).len(), 20);
    }

    #[test]
    fn clifford_examples() {
        assert_eq!(clifford_split(&lbl(&[1], &[1]), IndexTwoKernel::KerDelta), ChiOrSplit::Splits);
        assert_eq!(
            clifford_split(&lbl(&[2], &[]), IndexTwoKernel::KerDelta),
            ChiOrSplit::PairsWith(lbl(&[], &[2]))
        );
        assert_eq!(clifford_split(&lbl(&[2, 1], &[]), IndexTwoKernel::KerEps), ChiOrSplit::Splits);
    }

    #[test]
    fn label_serde() {
        let l = lbl(&[2], &[1]);
        assert_eq!(
            serde_json::to_string(&l).unwrap(),
            r#"{"lambda":[2],"mu":[1]}"#
        );
    }
}

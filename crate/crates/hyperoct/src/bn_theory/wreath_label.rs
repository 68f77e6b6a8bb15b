//! Irreducible labels of abelian wreath products `(Z/r) wr S_n` and the
//! multiplicity theorem for inductions from the passive factor.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bn_theory::BnIrrepLabel;
use crate::combinatorics::{induced_multiplicity_sym, Composition, Partition};
use crate::{Error, Result};

/// Label of an irreducible of `(Z/r) wr S_n` for abelian `Z/r`: one
/// partition block per residue `d`, almost all empty, with total size `n`.
/// Residue `d = 0` carries the trivial character of the base group; for
/// `r = 2` this reduces to a [`BnIrrepLabel`] via `d=0 -> lambda`,
/// `d=1 -> mu`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbelianWreathLabel {
    pub r: u32,
    /// `blocks[d]` is the partition attached to residue `d`; length `r`.
    pub blocks: Vec<Partition>,
}

impl fmt::Debug for AbelianWreathLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (d, b) in self.blocks.iter().enumerate() {
            if d > 0 {
                write!(f, ";")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

impl AbelianWreathLabel {
    pub fn new(r: u32, blocks: Vec<Partition>) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidArgument("modulus r must be at least 2".into()));
        }
        if blocks.len() != r as usize {
            return Err(Error::InvalidArgument(format!(
                "expected {r} residue blocks, got {}",
                blocks.len()
            )));
        }
        Ok(AbelianWreathLabel { r, blocks })
    }

    /// A label concentrated in a single residue block.
    pub fn single_block(r: u32, d: u32, p: Partition) -> Result<Self> {
        if d >= r {
            return Err(Error::InvalidArgument(format!("residue {d} out of range mod {r}")));
        }
        let mut blocks = vec![Partition::empty(); r as usize];
        blocks[d as usize] = p;
        AbelianWreathLabel::new(r, blocks)
    }

    pub fn n(&self) -> u32 {
        self.blocks.iter().map(Partition::size).sum()
    }

    /// All labels of `(Z/r) wr S_n`, sorted.
    pub fn all(r: u32, n: u32) -> Vec<AbelianWreathLabel> {
        fn rec(r: u32, remaining: u32, blocks: &mut Vec<Partition>, out: &mut Vec<AbelianWreathLabel>) {
            if blocks.len() == r as usize - 1 {
                let mut full = blocks.clone();
                for last in crate::combinatorics::partitions_of(remaining) {
                    full.push(last);
                    out.push(AbelianWreathLabel { r, blocks: full.clone() });
                    full.pop();
                }
                return;
            }
            for k in 0..=remaining {
                for p in crate::combinatorics::partitions_of(k) {
                    blocks.push(p);
                    rec(r, remaining - k, blocks, out);
                    blocks.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(r, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl From<&BnIrrepLabel> for AbelianWreathLabel {
    fn from(l: &BnIrrepLabel) -> Self {
        AbelianWreathLabel { r: 2, blocks: vec![l.lambda.clone(), l.mu.clone()] }
    }
}

/// Multiplicity of the labelled irreducible of `(Z/r) wr S_n` inside the
/// induction of the Specht module `S^w` from the passive `S_n`: equal to the
/// multiplicity of `S^w` in the induction of the block partitions from the
/// Young subgroup of block sizes.
pub fn passive_induction_mult(w: &Partition, u: &AbelianWreathLabel) -> Result<BigUint> {
    if w.size() != u.n() {
        return Err(Error::SizeMismatch(format!(
            "w has size {} but the wreath label has n = {}",
            w.size(),
            u.n()
        )));
    }
    let sizes = Composition::new(u.blocks.iter().map(Partition::size).collect());
    induced_multiplicity_sym(&sizes, &u.blocks, w)
}

/// Decomposition of an induction whose factors all carry the same base
/// character `d`: the constituents are the single-block labels `(d; S^t)`
/// with multiplicity given by the symmetric-group induction from `S(b)`.
pub fn nail_decompose(
    r: u32,
    d: u32,
    b: &Composition,
    factors: &[Partition],
) -> Result<BTreeMap<AbelianWreathLabel, BigUint>> {
    if d >= r {
        return Err(Error::InvalidArgument(format!("residue {d} out of range mod {r}")));
    }
    let mut out = BTreeMap::new();
    for t in crate::combinatorics::partitions_of(b.total()) {
        let m = induced_multiplicity_sym(b, factors, &t)?;
        if !m.is_zero() {
            out.insert(AbelianWreathLabel::single_block(r, d, t)?, m);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn passive_mult_examples() {
        // The multiplicity-3 witness at n = 10.
        let u = AbelianWreathLabel::new(2, vec![p(&[3, 2, 1]), p(&[3, 1])]).unwrap();
        assert_eq!(passive_induction_mult(&p(&[4, 3, 2, 1]), &u).unwrap(), 3u32.into());

        let u = AbelianWreathLabel::new(2, vec![p(&[2]), p(&[1])]).unwrap();
        assert_eq!(passive_induction_mult(&p(&[3]), &u).unwrap(), 1u32.into());

        let u = AbelianWreathLabel::new(2, vec![p(&[1]), p(&[1])]).unwrap();
        assert_eq!(passive_induction_mult(&p(&[2]), &u).unwrap(), 1u32.into());

        let u = AbelianWreathLabel::new(2, vec![p(&[1]), p(&[1])]).unwrap();
        assert!(passive_induction_mult(&p(&[3]), &u).is_err());
    }

    #[test]
    fn nail_examples() {
        let out = nail_decompose(2, 0, &Composition::new(vec![4]), &[p(&[4])]).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[&AbelianWreathLabel::single_block(2, 0, p(&[4])).unwrap()], 1u32.into());

        // Regular representation of S_2: both constituents once.
        let out = nail_decompose(2, 1, &Composition::new(vec![1, 1]), &[p(&[1]), p(&[1])]).unwrap();
        assert_eq!(out.len(), 2);
        assert_eq!(out[&AbelianWreathLabel::single_block(2, 1, p(&[2])).unwrap()], 1u32.into());
        assert_eq!(out[&AbelianWreathLabel::single_block(2, 1, p(&[1, 1])).unwrap()], 1u32.into());

        let out =
            nail_decompose(3, 2, &Composition::new(vec![3, 3]), &[p(&[2, 1]), p(&[2, 1])]).unwrap();
        assert_eq!(out[&AbelianWreathLabel::single_block(3, 2, p(&[3, 2, 1])).unwrap()], 2u32.into());
    }

    #[test]
    fn residue_out_of_range() {
        assert!(AbelianWreathLabel::single_block(2, 2, p(&[1])).is_err());
        assert!(nail_decompose(3, 3, &Composition::new(vec![1]), &[p(&[1])]).is_err());
        assert!(nail_decompose(2, 0, &Composition::new(vec![2]), &[p(&[1])]).is_err());
    }

    #[test]
    fn label_counts() {
        assert_eq!(AbelianWreathLabel::all(2, 3).len(), 10);
        assert_eq!(AbelianWreathLabel::all(3, 2).len(), 9);
        assert_eq!(AbelianWreathLabel::all(3, 4).len(), 51);
    }
}

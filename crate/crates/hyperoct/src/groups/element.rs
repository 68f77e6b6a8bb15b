//! Elements of the wreath product `(Z/r) wr S_n` and their embedding into
//! the symmetric group on `r*n` points.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bn_theory::SignedClass;
use crate::combinatorics::Partition;
use crate::groups::perm::Perm;
use crate::{Error, Result};

/// An element `(f, sigma)` of `(Z/r) wr S_n`: `f` is a length-`n` sequence
/// of residues mod `r` and `sigma` a permutation of the `n` coordinates.
/// The base group is written additively.
///
/// Multiplication is `(f,g)(f',g') = (f + g.f', gg')` with
/// `(g.f')(x) = f'(g^{-1} x)`; the inverse is `(g^{-1}.(-f), g^{-1})`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WreathElement {
    pub r: u32,
    pub f: Vec<u8>,
    pub sigma: Perm,
}

impl fmt::Debug for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.f, self.sigma.images())
    }
}

impl WreathElement {
    pub fn new(r: u32, f: Vec<u8>, sigma: Perm) -> Result<Self> {
        if f.len() != sigma.degree() {
            return Err(Error::InvalidArgument(format!(
                "flip vector has length {} but the permutation degree is {}",
                f.len(),
                sigma.degree()
            )));
        }
        if f.iter().any(|&x| x as u32 >= r) {
            return Err(Error::InvalidArgument(format!("residue out of range mod {r}")));
        }
        Ok(WreathElement { r, f, sigma })
    }

    pub fn identity(r: u32, n: usize) -> Self {
        WreathElement { r, f: vec![0; n], sigma: Perm::identity(n) }
    }

    /// The standard basis element `e_i` (1-indexed coordinate) with residue
    /// `d` and trivial permutation part.
    pub fn basis_flip(r: u32, n: usize, i: usize, d: u8) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::InvalidArgument(format!("coordinate {i} out of range 1..={n}")));
        }
        let mut f = vec![0; n];
        f[i - 1] = d % r as u8;
        Ok(WreathElement { r, f, sigma: Perm::identity(n) })
    }

    /// The passive permutation `(0, sigma)`.
    pub fn passive(r: u32, sigma: Perm) -> Self {
        let n = sigma.degree();
        WreathElement { r, f: vec![0; n], sigma }
    }

    pub fn n(&self) -> usize {
        self.f.len()
    }

    fn check_ambient(&self, other: &WreathElement) -> Result<()> {
        if self.r != other.r || self.n() != other.n() {
            return Err(Error::InvalidArgument(format!(
                "ambient mismatch: (r={}, n={}) vs (r={}, n={})",
                self.r,
                self.n(),
                other.r,
                other.n()
            )));
        }
        Ok(())
    }

    /// Group law `(f,g)(f',g') = (f + g.f', gg')`.
    pub fn group_op(&self, other: &WreathElement) -> Result<WreathElement> {
        self.check_ambient(other)?;
        let g_inv = self.sigma.inverse();
        let mut f = self.f.clone();
        for (x, slot) in f.iter_mut().enumerate() {
            let moved = other.f[g_inv.apply(x as u8) as usize];
            *slot = ((*slot as u32 + moved as u32) % self.r) as u8;
        }
        Ok(WreathElement { r: self.r, f, sigma: self.sigma.compose(&other.sigma) })
    }

    /// Inverse `(g^{-1}.(-f), g^{-1})`.
    pub fn inverse(&self) -> WreathElement {
        let g_inv = self.sigma.inverse();
        let mut f = vec![0u8; self.f.len()];
        for (x, slot) in f.iter_mut().enumerate() {
            let orig = self.f[g_inv.inverse().apply(x as u8) as usize];
            *slot = ((self.r - orig as u32) % self.r) as u8;
        }
        WreathElement { r: self.r, f, sigma: g_inv }
    }

    pub fn is_identity(&self) -> bool {
        self.f.iter().all(|&x| x == 0) && self.sigma.is_identity()
    }

    /// Number of nonzero residues (`#f` in additive notation; for `r = 2`
    /// the number of sign flips).
    pub fn flip_count(&self) -> u32 {
        self.f.iter().filter(|&&x| x != 0).count() as u32
    }

    /// Sum of the residues mod `r`.
    pub fn residue_sum(&self) -> u32 {
        self.f.iter().map(|&x| x as u32).sum::<u32>() % self.r
    }

    /// Faithful embedding into the symmetric group on `r*n` points:
    /// coordinate `i` (0-indexed) carries the block `{r*i, .., r*i + r-1}`;
    /// a residue `d` shifts within the block by `d` and `sigma` permutes
    /// blocks preserving offsets. For `r = 2` this is the interleaved
    /// two-point convention with block `i` on points `{2i, 2i+1}`.
    pub fn embed_sym(&self) -> Perm {
        let r = self.r as usize;
        let n = self.n();
        let mut images = vec![0u8; r * n];
        for i in 0..n {
            let target_block = self.sigma.apply(i as u8) as usize;
            let shift = self.f[target_block] as usize;
            for j in 0..r {
                images[i * r + j] = (target_block * r + (j + shift) % r) as u8;
            }
        }
        Perm::from_images(images).expect("block embedding is a permutation")
    }

    /// Recovers the wreath element from its block-embedded image.
    pub fn from_embedded(r: u32, n: usize, p: &Perm) -> Result<WreathElement> {
        let rr = r as usize;
        if p.degree() != rr * n {
            return Err(Error::InvalidArgument("embedded degree mismatch".into()));
        }
        let mut f = vec![0u8; n];
        let mut sigma = vec![0u8; n];
        for i in 0..n {
            let img = p.apply((i * rr) as u8) as usize;
            let block = img / rr;
            let shift = img % rr;
            sigma[i] = block as u8;
            f[block] = shift as u8;
            // All points of the block must move consistently.
            for j in 1..rr {
                if p.apply((i * rr + j) as u8) as usize != block * rr + (j + shift) % rr {
                    return Err(Error::InvalidArgument(
                        "permutation is not in the image of the block embedding".into(),
                    ));
                }
            }
        }
        WreathElement::new(r, f, Perm::from_images(sigma)?)
    }

    /// Signed cycle type (r = 2 only): each `sigma`-cycle contributes its
    /// length to `pos` if the flip sum over the cycle is even, else to
    /// `neg`. A complete conjugacy invariant of `B_n`.
    pub fn signed_cycle_type(&self) -> Result<SignedClass> {
        if self.r != 2 {
            return Err(Error::InvalidArgument(format!(
                "signed cycle type requires r = 2, ambient has r = {}",
                self.r
            )));
        }
        let (pos, neg) = self.colored_cycles_split();
        Ok(SignedClass::new(
            Partition::from_unsorted(pos),
            Partition::from_unsorted(neg),
        ))
    }

    fn colored_cycles_split(&self) -> (Vec<u32>, Vec<u32>) {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (len, residue) in self.colored_cycles() {
            if residue == 0 {
                pos.push(len);
            } else {
                neg.push(len);
            }
        }
        (pos, neg)
    }

    /// Cycles of the permutation part, each with the residue sum of `f` over
    /// the cycle; the multiset of `(length, residue)` pairs classifies
    /// conjugacy in any abelian wreath product.
    pub fn colored_cycles(&self) -> Vec<(u32, u32)> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut sum = 0u32;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                sum = (sum + self.f[x] as u32) % self.r;
                x = self.sigma.apply(x as u8) as usize;
                len += 1;
            }
            out.push((len, sum));
        }
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2(f: &[u8], cycles: &[&[u8]]) -> WreathElement {
        WreathElement::new(2, f.to_vec(), Perm::from_cycles(f.len(), cycles).unwrap()).unwrap()
    }

    #[test]
    fn law_example() {
        // ((1,0),(1 2)) * ((1,0),(1 2)) = ((1,1), id)
        let x = b2(&[1, 0], &[&[0, 1]]);
        let y = x.group_op(&x).unwrap();
        assert_eq!(y, b2(&[1, 1], &[]));
    }

    #[test]
    fn identity_and_inverse() {
        let x = b2(&[1, 0], &[&[0, 1]]);
        let id = WreathElement::identity(2, 2);
        assert_eq!(x.group_op(&id).unwrap(), x);
        assert_eq!(x.group_op(&x.inverse()).unwrap(), id);
        assert_eq!(x.inverse(), b2(&[0, 1], &[&[0, 1]]));
    }

    #[test]
    fn embedding_matches_interleaved_convention() {
        // (e_1, id) in B_2 transposes {0,1} and fixes {2,3}.
        let t = b2(&[1, 0], &[]);
        assert_eq!(t.embed_sym().images(), &[1, 0, 2, 3]);
        // (0, (1 2)) in B_2 is (0 2)(1 3) in block form.
        let s = b2(&[0, 0], &[&[0, 1]]);
        assert_eq!(s.embed_sym().images(), &[2, 3, 0, 1]);
        assert!(WreathElement::identity(2, 3).embed_sym().is_identity());
    }

    #[test]
    fn embedding_is_homomorphism_exhaustive_b2_b3() {
        for n in 2..=3usize {
            let mut all = Vec::new();
            for sig in all_perms(n) {
                for mask in 0..(1u32 << n) {
                    let f: Vec<u8> = (0..n).map(|i| ((mask >> i) & 1) as u8).collect();
                    all.push(WreathElement::new(2, f, sig.clone()).unwrap());
                }
            }
            for x in &all {
                for y in &all {
                    let lhs = x.group_op(y).unwrap().embed_sym();
                    let rhs = x.embed_sym().compose(&y.embed_sym());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn from_embedded_roundtrip() {
        let x = WreathElement::new(3, vec![2, 0, 1], Perm::from_cycles(3, &[&[0, 2]]).unwrap())
            .unwrap();
        let p = x.embed_sym();
        assert_eq!(WreathElement::from_embedded(3, 3, &p).unwrap(), x);
    }

    #[test]
    fn signed_types() {
        assert_eq!(
            WreathElement::identity(2, 2).signed_cycle_type().unwrap(),
            SignedClass::new(Partition::new(vec![1, 1]).unwrap(), Partition::empty())
        );
        assert_eq!(
            b2(&[0, 0], &[&[0, 1]]).signed_cycle_type().unwrap(),
            SignedClass::new(Partition::new(vec![2]).unwrap(), Partition::empty())
        );
        assert_eq!(
            b2(&[1, 0], &[]).signed_cycle_type().unwrap(),
            SignedClass::new(Partition::new(vec![1]).unwrap(), Partition::new(vec![1]).unwrap())
        );
    }

    fn all_perms(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut idx: Vec<u8> = (0..n as u8).collect();
        permute(&mut idx, 0, &mut out);
        fn permute(v: &mut Vec<u8>, k: usize, out: &mut Vec<Perm>) {
            if k == v.len() {
                out.push(Perm::from_images(v.clone()).unwrap());
                return;
            }
            for i in k..v.len() {
                v.swap(k, i);
                permute(v, k + 1, out);
                v.swap(k, i);
            }
        }
        out
    }
}

//! Permutations of a finite point set and materialised permutation groups.
//!
//! Every group this crate touches is stored through its faithful action on
//! at most 25 points (wreath elements through their block embedding), so an
//! element packs into a `u128` fingerprint: 5 bits per point, in one-line
//! notation. Fingerprint order is the canonical element order everywhere.

use std::collections::HashMap;
use std::fmt;

use once_cell::sync::OnceCell;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub const MAX_DEGREE: usize = 25;

/// A permutation of `{0, .., degree-1}` in one-line notation: `images[i]` is
/// the image of `i`. Products compose right-to-left: `(a * b)(x) = a(b(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm {
    images: Vec<u8>,
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm { images: (0..degree as u8).collect() }
    }

    /// Builds from one-line images; must be a bijection on `0..len`.
    pub fn from_images(images: Vec<u8>) -> Result<Perm> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::InvalidArgument(format!(
                "permutation degree {n} exceeds the supported maximum {MAX_DEGREE}"
            )));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if (i as usize) >= n || seen[i as usize] {
                return Err(Error::InvalidArgument(format!(
                    "not a permutation of 0..{n}: {images:?}"
                )));
            }
            seen[i as usize] = true;
        }
        Ok(Perm { images })
    }

    /// Builds from disjoint-cycle notation over `0..degree`.
    pub fn from_cycles(degree: usize, cycles: &[&[u8]]) -> Result<Perm> {
        let mut images: Vec<u8> = (0..degree as u8).collect();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a as usize >= degree || b as usize >= degree {
                    return Err(Error::InvalidArgument("cycle point out of range".into()));
                }
                images[a as usize] = b;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: u8) -> u8 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// `self * other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u8 == x)
    }

    /// `self * other * self^{-1}`.
    pub fn conjugate(&self, other: &Perm) -> Perm {
        self.compose(other).compose(&self.inverse())
    }

    pub fn order(&self) -> u64 {
        let mut ord = 1u64;
        let mut acc = self.clone();
        while !acc.is_identity() {
            acc = self.compose(&acc);
            ord += 1;
        }
        ord
    }

    /// Sign of the permutation: +1 or -1.
    pub fn sign(&self) -> i32 {
        let mut seen = vec![false; self.images.len()];
        let mut sign = 1;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Cycle lengths, unsorted.
    pub fn cycle_lengths(&self) -> Vec<u32> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            out.push(len);
        }
        out
    }

    /// Packed one-line encoding: 5 bits per point. Total order on elements.
    pub fn fingerprint(&self) -> u128 {
        let mut fp = 0u128;
        for &x in self.images.iter().rev() {
            fp = (fp << 5) | x as u128;
        }
        fp
    }

    pub fn from_fingerprint(degree: usize, mut fp: u128) -> Perm {
        let mut images = Vec::with_capacity(degree);
        for _ in 0..degree {
            images.push((fp & 31) as u8);
            fp >>= 5;
        }
        Perm { images }
    }
}

/// A finite permutation group materialised as its full element set, in
/// fingerprint order, with an index map for O(1) membership and lookups.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<u128, usize>,
    exponent: OnceCell<u64>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, order {})", self.degree, self.order())
    }
}

impl PermGroup {
    /// Breadth-first closure of the generators. Fails with a resource error
    /// if the group would exceed `budget` elements.
    pub fn closure(degree: usize, generators: Vec<Perm>, budget: u64) -> Result<PermGroup> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidArgument("generator degree mismatch".into()));
            }
        }
        let id = Perm::identity(degree);
        let mut index = HashMap::new();
        let mut elements = vec![id.clone()];
        index.insert(id.fingerprint(), 0usize);
        let mut frontier = 0usize;
        while frontier < elements.len() {
            let x = elements[frontier].clone();
            frontier += 1;
            for g in &generators {
                let y = x.compose(g);
                if let std::collections::hash_map::Entry::Vacant(slot) = index.entry(y.fingerprint())
                {
                    if elements.len() as u64 >= budget {
                        return Err(Error::Budget {
                            what: format!("closure of a degree-{degree} permutation group"),
                            bound: budget,
                        });
                    }
                    slot.insert(elements.len());
                    elements.push(y);
                }
            }
        }
        // Canonical element order: by fingerprint.
        elements.sort_by_key(Perm::fingerprint);
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.fingerprint(), i))
            .collect();
        Ok(PermGroup { degree, generators, elements, index, exponent: OnceCell::new() })
    }

    /// Wraps an already-closed element set (sorted or not).
    pub fn from_elements(degree: usize, mut elements: Vec<Perm>, generators: Vec<Perm>) -> PermGroup {
        elements.sort_by_key(Perm::fingerprint);
        elements.dedup();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.fingerprint(), i))
            .collect();
        PermGroup { degree, generators, elements, index, exponent: OnceCell::new() }
    }

    /// The full symmetric group on `n` points.
    pub fn symmetric(n: usize, budget: u64) -> Result<PermGroup> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[&[0, 1]])?);
        }
        if n >= 3 {
            let cycle: Vec<u8> = (0..n as u8).collect();
            gens.push(Perm::from_cycles(n, &[&cycle])?);
        }
        PermGroup::closure(n, gens, budget)
    }

    /// The alternating group on `n` points.
    pub fn alternating(n: usize, budget: u64) -> Result<PermGroup> {
        let mut gens = Vec::new();
        for k in 2..n as u8 {
            gens.push(Perm::from_cycles(n, &[&[0, 1, k]])?);
        }
        PermGroup::closure(n, gens, budget)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.index.contains_key(&p.fingerprint())
    }

    pub fn element_index(&self, p: &Perm) -> Option<usize> {
        self.index.get(&p.fingerprint()).copied()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        *self.exponent.get_or_init(|| {
            let mut e = 1u64;
            for x in &self.elements {
                e = num_integer::lcm(e, x.order());
            }
            e
        })
    }

    /// Digest of the sorted element fingerprints; identifies the subgroup as
    /// a set, independently of any generating presentation.
    pub fn fingerprint_digest(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut hasher = Sha256::new();
        hasher.update((self.degree as u64).to_le_bytes());
        for e in &self.elements {
            hasher.update(e.fingerprint().to_le_bytes());
        }
        let out = hasher.finalize();
        out.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Orbits of the natural action on points, sorted by least point.
    pub fn point_orbits(&self) -> Vec<Vec<u8>> {
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for start in 0..self.degree as u8 {
            if seen[start as usize] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start as usize] = true;
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i];
                i += 1;
                for g in &self.generators {
                    let y = g.apply(x);
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_first() {
        let a = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        // (a*b)(2) = a(b(2)) = a(1) = 0
        assert_eq!(a.compose(&b).apply(2), 0);
    }

    #[test]
    fn inverse_and_order() {
        let c = Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        assert!(c.compose(&c.inverse()).is_identity());
        assert_eq!(c.order(), 5);
        assert_eq!(c.sign(), 1);
        assert_eq!(Perm::from_cycles(4, &[&[0, 1]]).unwrap().sign(), -1);
    }

    #[test]
    fn fingerprint_roundtrip() {
        let c = Perm::from_cycles(7, &[&[0, 3], &[1, 4, 5]]).unwrap();
        assert_eq!(Perm::from_fingerprint(7, c.fingerprint()), c);
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        assert_eq!(PermGroup::symmetric(4, 10_000).unwrap().order(), 24);
        assert_eq!(PermGroup::alternating(4, 10_000).unwrap().order(), 12);
        assert_eq!(PermGroup::symmetric(1, 10).unwrap().order(), 1);
        assert_eq!(PermGroup::alternating(2, 10).unwrap().order(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let err = PermGroup::symmetric(5, 30).unwrap_err();
        assert!(matches!(err, Error::Budget { bound: 30, .. }));
    }

    #[test]
    fn exponent_of_s4() {
        assert_eq!(PermGroup::symmetric(4, 100).unwrap().exponent(), 12);
    }
}

//! Subgroups of `(Z/r) wr S_n`: lazy closure, canonical fingerprints,
//! projections to `S_n`, fibers, the `m_K` invariant and the
//! `Lambda^alpha / Lambda^beta` component split.

use std::collections::HashSet;
use std::fmt;

use once_cell::sync::OnceCell;

use serde::Serialize;

use crate::groups::descriptor::SubgroupDescriptor;
use crate::groups::element::WreathElement;
use crate::groups::perm::{Perm, PermGroup};
use crate::{Error, Result};

/// Serializable summary of a materialised subgroup: descriptor, order,
/// generator list and the canonical element-set digest.
#[derive(Clone, Debug, Serialize)]
pub struct SubgroupInfo {
    pub descriptor: Option<String>,
    pub r: u32,
    pub n: usize,
    pub order: u64,
    pub generators: Vec<WreathElement>,
    pub fingerprint: String,
}

/// A subgroup of the ambient wreath product `(Z/r) wr S_n`, held as a
/// generator list with a lazily materialised element set. Elements are
/// deduplicated and ordered by their embedded-permutation fingerprints, so
/// all subgroup identity questions reduce to one canonical form.
pub struct Subgroup {
    pub r: u32,
    pub n: usize,
    pub descriptor: Option<SubgroupDescriptor>,
    generators: Vec<WreathElement>,
    elements: OnceCell<Vec<WreathElement>>,
}

impl Clone for Subgroup {
    fn clone(&self) -> Self {
        Subgroup {
            r: self.r,
            n: self.n,
            descriptor: self.descriptor.clone(),
            generators: self.generators.clone(),
            elements: self.elements.clone(),
        }
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.descriptor {
            Some(d) => write!(f, "Subgroup({d} in ({},{}))", self.r, self.n),
            None => write!(f, "Subgroup(<raw> in ({},{}), {} gens)", self.r, self.n, self.generators.len()),
        }
    }
}

impl Subgroup {
    pub fn from_generators(
        r: u32,
        n: usize,
        descriptor: Option<SubgroupDescriptor>,
        generators: Vec<WreathElement>,
    ) -> Result<Subgroup> {
        for g in &generators {
            if g.r != r || g.n() != n {
                return Err(Error::InvalidArgument(format!(
                    "generator ambient ({},{}) does not match subgroup ambient ({r},{n})",
                    g.r,
                    g.n()
                )));
            }
        }
        Ok(Subgroup { r, n, descriptor, generators, elements: OnceCell::new() })
    }

    pub fn generators(&self) -> &[WreathElement] {
        &self.generators
    }

    /// The materialised element set, sorted by embedded fingerprint.
    /// Computed once; concurrent callers see either nothing or the finished
    /// set. Fails (without caching) if the closure would exceed `budget`.
    pub fn elements(&self, budget: u64) -> Result<&[WreathElement]> {
        self.elements
            .get_or_try_init(|| {
                let id = WreathElement::identity(self.r, self.n);
                let mut seen: HashSet<u128> = HashSet::new();
                seen.insert(id.embed_sym().fingerprint());
                let mut list = vec![id];
                let mut frontier = 0;
                while frontier < list.len() {
                    let x = list[frontier].clone();
                    frontier += 1;
                    for g in &self.generators {
                        let y = x.group_op(g)?;
                        if seen.insert(y.embed_sym().fingerprint()) {
                            if list.len() as u64 >= budget {
                                return Err(Error::Budget {
                                    what: format!("closure of a subgroup of ({},{})", self.r, self.n),
                                    bound: budget,
                                });
                            }
                            list.push(y);
                        }
                    }
                }
                list.sort_by_key(|e| e.embed_sym().fingerprint());
                Ok(list)
            })
            .map(Vec::as_slice)
    }

    pub fn order(&self, budget: u64) -> Result<u64> {
        Ok(self.elements(budget)?.len() as u64)
    }

    pub fn contains(&self, x: &WreathElement, budget: u64) -> Result<bool> {
        let fp = x.embed_sym().fingerprint();
        Ok(self
            .elements(budget)?
            .binary_search_by_key(&fp, |e| e.embed_sym().fingerprint())
            .is_ok())
    }

    /// The subgroup as a permutation group on `r*n` points.
    pub fn to_perm_group(&self, budget: u64) -> Result<PermGroup> {
        let elements = self.elements(budget)?;
        Ok(PermGroup::from_elements(
            self.r as usize * self.n,
            elements.iter().map(WreathElement::embed_sym).collect(),
            self.generators.iter().map(WreathElement::embed_sym).collect(),
        ))
    }

    /// Canonical digest of the element set.
    pub fn fingerprint_digest(&self, budget: u64) -> Result<String> {
        Ok(self.to_perm_group(budget)?.fingerprint_digest())
    }

    /// Serializable summary (descriptor, order, generators, digest).
    pub fn describe(&self, budget: u64) -> Result<SubgroupInfo> {
        Ok(SubgroupInfo {
            descriptor: self.descriptor.as_ref().map(|d| d.to_string()),
            r: self.r,
            n: self.n,
            order: self.order(budget)?,
            generators: self.generators.clone(),
            fingerprint: self.fingerprint_digest(budget)?,
        })
    }

    /// `gamma_K`: the projection image in `S_n`, as a permutation group on
    /// `n` points.
    pub fn gamma(&self, budget: u64) -> Result<PermGroup> {
        let elements = self.elements(budget)?;
        let mut sigmas: Vec<Perm> = elements.iter().map(|e| e.sigma.clone()).collect();
        sigmas.sort_by_key(Perm::fingerprint);
        sigmas.dedup();
        let gens = self.generators.iter().map(|e| e.sigma.clone()).collect();
        Ok(PermGroup::from_elements(self.n, sigmas, gens))
    }

    /// The fiber `Gamma^g_K` over a permutation `g`: all elements whose
    /// permutation part is `g`. A left coset of the identity fiber.
    pub fn gamma_fiber(&self, g: &Perm, budget: u64) -> Result<Vec<WreathElement>> {
        Ok(self
            .elements(budget)?
            .iter()
            .filter(|e| e.sigma == *g)
            .cloned()
            .collect())
    }

    /// `m_K`: the minimum number of nonzero residues over the nonidentity
    /// elements of the identity fiber; `None` when that fiber is trivial.
    pub fn m_value(&self, budget: u64) -> Result<Option<u32>> {
        Ok(self
            .gamma_fiber(&Perm::identity(self.n), budget)?
            .iter()
            .filter(|e| !e.is_identity())
            .map(WreathElement::flip_count)
            .min())
    }

    fn check_split(&self, k: usize, budget: u64) -> Result<()> {
        if k > self.n {
            return Err(Error::InvalidArgument(format!("split size {k} exceeds n = {}", self.n)));
        }
        let head = self.n - k;
        for e in self.elements(budget)? {
            let splits = (0..self.n).all(|i| {
                let img = e.sigma.apply(i as u8) as usize;
                (i < head) == (img < head)
            });
            if !splits {
                return Err(Error::InvalidArgument(format!(
                    "gamma_K is not contained in the Young subgroup S_{head} x S_{k}"
                )));
            }
        }
        Ok(())
    }

    fn alpha_part(&self, e: &WreathElement, k: usize) -> WreathElement {
        let head = self.n - k;
        let mut f = e.f.clone();
        for x in f.iter_mut().skip(head) {
            *x = 0;
        }
        let mut images: Vec<u8> = (0..self.n as u8).collect();
        for (i, img) in images.iter_mut().enumerate().take(head) {
            *img = e.sigma.apply(i as u8);
        }
        WreathElement::new(self.r, f, Perm::from_images(images).expect("split is a permutation"))
            .expect("alpha part stays in the ambient group")
    }

    fn beta_part(&self, e: &WreathElement, k: usize) -> WreathElement {
        let head = self.n - k;
        let mut f = vec![0; self.n];
        f[head..].copy_from_slice(&e.f[head..]);
        let mut images: Vec<u8> = (0..self.n as u8).collect();
        for (i, img) in images.iter_mut().enumerate().skip(head) {
            *img = e.sigma.apply(i as u8);
        }
        WreathElement::new(self.r, f, Perm::from_images(images).expect("split is a permutation"))
            .expect("beta part stays in the ambient group")
    }

    /// Component projections of a subgroup of `F wr (S_{n-k} x S_k)`:
    /// `Lambda^alpha` collects the first-factor parts, `Lambda^beta` the
    /// second-factor parts; `K <= Lambda^alpha Lambda^beta`.
    pub fn lambda_split(&self, k: usize, budget: u64) -> Result<(Subgroup, Subgroup)> {
        self.check_split(k, budget)?;
        let alpha_gens: Vec<_> = self.generators.iter().map(|g| self.alpha_part(g, k)).collect();
        let beta_gens: Vec<_> = self.generators.iter().map(|g| self.beta_part(g, k)).collect();
        Ok((
            Subgroup::from_generators(self.r, self.n, None, alpha_gens)?,
            Subgroup::from_generators(self.r, self.n, None, beta_gens)?,
        ))
    }

    /// The auxiliary normal subgroup `L = { lambda_alpha : lambda in K,
    /// lambda_beta = id }`, i.e. the kernel of the beta projection.
    pub fn aux_l(&self, k: usize, budget: u64) -> Result<Subgroup> {
        self.check_split(k, budget)?;
        let head = self.n - k;
        let members: Vec<WreathElement> = self
            .elements(budget)?
            .iter()
            .filter(|e| {
                e.f[head..].iter().all(|&x| x == 0)
                    && (head..self.n).all(|i| e.sigma.apply(i as u8) as usize == i)
            })
            .cloned()
            .collect();
        Subgroup::from_generators(self.r, self.n, None, members)
    }
}

/// Whether two subgroups of the same ambient group are conjugate inside it:
/// breadth-first orbit of the element-set fingerprint under conjugation by
/// the ambient generators.
pub fn are_conjugate(a: &Subgroup, b: &Subgroup, ambient: &Subgroup, budget: u64) -> Result<bool> {
    if a.r != ambient.r || b.r != ambient.r || a.n != ambient.n || b.n != ambient.n {
        return Err(Error::InvalidArgument("ambient mismatch in conjugacy test".into()));
    }
    let set_of = |s: &Subgroup| -> Result<Vec<u128>> {
        Ok(s.elements(budget)?.iter().map(|e| e.embed_sym().fingerprint()).collect())
    };
    let start = set_of(a)?;
    let target = set_of(b)?;
    if start.len() != target.len() {
        return Ok(false);
    }
    let gens: Vec<(WreathElement, WreathElement)> = ambient
        .generators()
        .iter()
        .map(|g| (g.clone(), g.inverse()))
        .collect();
    let conj_set = |set: &[u128], g: &WreathElement, ginv: &WreathElement| -> Result<Vec<u128>> {
        let mut out = Vec::with_capacity(set.len());
        for &fp in set {
            let x = WreathElement::from_embedded(a.r, a.n, &Perm::from_fingerprint(
                a.r as usize * a.n,
                fp,
            ))?;
            out.push(g.group_op(&x)?.group_op(ginv)?.embed_sym().fingerprint());
        }
        out.sort_unstable();
        Ok(out)
    };
    let mut seen: HashSet<Vec<u128>> = HashSet::new();
    let mut queue = vec![start.clone()];
    seen.insert(start);
    while let Some(current) = queue.pop() {
        if current == target {
            return Ok(true);
        }
        for (g, ginv) in &gens {
            let next = conj_set(&current, g, ginv)?;
            if seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    Ok(false)
}

/// A standalone closure over wreath elements, outside any `Subgroup`.
pub fn closure(gens: &[WreathElement], budget: u64) -> Result<Vec<WreathElement>> {
    if gens.is_empty() {
        return Err(Error::InvalidArgument("closure of an empty generator list needs an ambient; use Subgroup::from_generators".into()));
    }
    let sub = Subgroup::from_generators(gens[0].r, gens[0].n(), None, gens.to_vec())?;
    Ok(sub.elements(budget)?.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::descriptor::make_subgroup;
    use crate::groups::descriptor::SubgroupDescriptor as D;

    const BUDGET: u64 = 1 << 20;

    #[test]
    fn coxeter_generators_generate_b2() {
        let b2 = make_subgroup(&D::Full(2), 2).unwrap();
        assert_eq!(b2.order(BUDGET).unwrap(), 8);
    }

    #[test]
    fn s2bar_conjugates() {
        let b2 = make_subgroup(&D::Full(2), 2).unwrap();
        let s2 = make_subgroup(&D::PassiveSn(2), 2).unwrap();
        let y2 = make_subgroup(&D::Yn(2), 2).unwrap();
        let diag = make_subgroup(&D::DiagF(2), 2).unwrap();
        assert!(are_conjugate(&s2, &y2, &b2, BUDGET).unwrap());
        assert!(!are_conjugate(&s2, &diag, &b2, BUDGET).unwrap());
    }

    #[test]
    fn m_values() {
        let d4 = make_subgroup(&D::Dn(4), 2).unwrap();
        assert_eq!(d4.m_value(BUDGET).unwrap(), Some(2));
        let diag = make_subgroup(&D::DiagFSn(4), 2).unwrap();
        assert_eq!(diag.m_value(BUDGET).unwrap(), Some(4));
        let passive = make_subgroup(&D::PassiveSn(4), 2).unwrap();
        assert_eq!(passive.m_value(BUDGET).unwrap(), None);
        let b4 = make_subgroup(&D::Full(4), 2).unwrap();
        assert_eq!(b4.m_value(BUDGET).unwrap(), Some(1));
    }

    #[test]
    fn gamma_and_fibers() {
        let d3 = make_subgroup(&D::Dn(3), 2).unwrap();
        let gamma = d3.gamma(BUDGET).unwrap();
        assert_eq!(gamma.order(), 6);
        // Coset property: every fiber has the size of the identity fiber.
        let id_fiber = d3.gamma_fiber(&Perm::identity(3), BUDGET).unwrap();
        for g in gamma.elements() {
            assert_eq!(d3.gamma_fiber(g, BUDGET).unwrap().len(), id_fiber.len());
        }
    }

    #[test]
    fn lambda_split_product() {
        let k = make_subgroup(
            &D::Product(Box::new(D::Dn(2)), Box::new(D::Dn(2))),
            2,
        )
        .unwrap();
        let (alpha, beta) = k.lambda_split(2, BUDGET).unwrap();
        assert_eq!(alpha.order(BUDGET).unwrap(), 4);
        assert_eq!(beta.order(BUDGET).unwrap(), 4);
        let l = k.aux_l(2, BUDGET).unwrap();
        assert_eq!(l.order(BUDGET).unwrap(), 4);
    }

    #[test]
    fn lambda_split_of_a_fiber_product() {
        use crate::groups::descriptor::CharName;
        // The graph-like kernel of eps * delta on B_2 x B_1 projects fully
        // onto both factors.
        let k = make_subgroup(
            &D::FiberProduct(
                Box::new(D::Full(2)),
                CharName::Eps,
                Box::new(D::Full(1)),
                CharName::Delta,
            ),
            2,
        )
        .unwrap();
        let (alpha, beta) = k.lambda_split(1, BUDGET).unwrap();
        assert_eq!(alpha.order(BUDGET).unwrap(), 8);
        assert_eq!(beta.order(BUDGET).unwrap(), 2);
        // The beta-kernel L is the eps-kernel of the head.
        let l = k.aux_l(1, BUDGET).unwrap();
        assert_eq!(l.order(BUDGET).unwrap(), 4);
    }

    #[test]
    fn split_requires_young_containment() {
        let b4 = make_subgroup(&D::Full(4), 2).unwrap();
        assert!(b4.lambda_split(2, BUDGET).is_err());
    }
}

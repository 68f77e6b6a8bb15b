//! Subgroup lattice enumeration up to conjugacy: breadth-first `<H, g>`
//! extensions starting from the cyclic subgroups, deduplicated first by the
//! element-set fingerprint and then by the conjugation orbit.

use std::collections::{HashSet, VecDeque};

use crate::groups::perm::PermGroup;
use crate::{Error, Result};

/// One conjugacy class of subgroups: the representative's sorted element
/// indices into the ambient group, a small generating set, and the number
/// of conjugates.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub rep: Vec<u32>,
    pub rep_gens: Vec<u32>,
    pub class_size: u64,
}

impl SubgroupClass {
    pub fn order(&self) -> u64 {
        self.rep.len() as u64
    }
}

struct MulTable {
    order: usize,
    identity: u32,
    table: Vec<u32>,
    inverse: Vec<u32>,
}

impl MulTable {
    fn build(g: &PermGroup) -> MulTable {
        let n = g.order() as usize;
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = g.element(i).compose(g.element(j));
                table[i * n + j] = g.element_index(&prod).expect("closed") as u32;
            }
        }
        let inverse = (0..n)
            .map(|i| g.element_index(&g.element(i).inverse()).expect("closed") as u32)
            .collect();
        let identity = g
            .elements()
            .iter()
            .position(|e| e.is_identity())
            .expect("identity present") as u32;
        MulTable { order: n, identity, table, inverse }
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inverse[g as usize])
    }
}

fn closure_indices(t: &MulTable, gens: &[u32]) -> Vec<u32> {
    let mut member = vec![false; t.order];
    member[t.identity as usize] = true;
    let mut list = vec![t.identity];
    let mut frontier = 0;
    while frontier < list.len() {
        let x = list[frontier];
        frontier += 1;
        for &g in gens {
            let y = t.mul(x, g);
            if !member[y as usize] {
                member[y as usize] = true;
                list.push(y);
            }
        }
    }
    list.sort_unstable();
    list
}

/// Greedy small generating set for a closed element-index set.
fn greedy_generators(t: &MulTable, set: &[u32]) -> Vec<u32> {
    let mut gens: Vec<u32> = Vec::new();
    let mut have: HashSet<u32> = closure_indices(t, &gens).into_iter().collect();
    for &x in set {
        if !have.contains(&x) {
            gens.push(x);
            have = closure_indices(t, &gens).into_iter().collect();
            if have.len() == set.len() {
                break;
            }
        }
    }
    gens
}

/// Enumerates all subgroups of `g` up to conjugacy, deterministically:
/// output sorted by (order, representative index set). `max_subgroups`
/// bounds the number of raw subgroups ever held.
pub fn subgroups_up_to_conjugacy(g: &PermGroup, max_subgroups: u64) -> Result<Vec<SubgroupClass>> {
    let t = MulTable::build(g);
    let n = t.order;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut classes: Vec<SubgroupClass> = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();

    let gen_indices: Vec<u32> = g
        .generators()
        .iter()
        .map(|x| g.element_index(x).expect("generators belong to the group") as u32)
        .collect();

    let register = |set: Vec<u32>,
                        seen: &mut HashSet<Vec<u32>>,
                        classes: &mut Vec<SubgroupClass>,
                        queue: &mut VecDeque<usize>|
     -> Result<bool> {
        if seen.contains(&set) {
            return Ok(false);
        }
        // Conjugation orbit of the whole set.
        let mut orbit: Vec<Vec<u32>> = vec![set.clone()];
        let mut orbit_seen: HashSet<Vec<u32>> = orbit.iter().cloned().collect();
        let mut i = 0;
        while i < orbit.len() {
            let current = orbit[i].clone();
            i += 1;
            for &cg in &gen_indices {
                let mut conj: Vec<u32> = current.iter().map(|&x| t.conj(cg, x)).collect();
                conj.sort_unstable();
                if orbit_seen.insert(conj.clone()) {
                    orbit.push(conj);
                }
            }
        }
        if (seen.len() + orbit.len()) as u64 > max_subgroups {
            return Err(Error::Budget {
                what: "subgroup lattice enumeration (raw subgroup count)".into(),
                bound: max_subgroups,
            });
        }
        let rep = orbit.iter().min().expect("orbit nonempty").clone();
        let class_size = orbit.len() as u64;
        for s in orbit {
            seen.insert(s);
        }
        let rep_gens = greedy_generators(&t, &rep);
        classes.push(SubgroupClass { rep, rep_gens, class_size });
        queue.push_back(classes.len() - 1);
        Ok(true)
    };

    // Seeds: all cyclic subgroups (the identity's gives the trivial group).
    for x in 0..n as u32 {
        let set = closure_indices(&t, &[x]);
        register(set, &mut seen, &mut classes, &mut queue)?;
    }
    // BFS extensions of class representatives by single elements.
    while let Some(ci) = queue.pop_front() {
        let (rep, rep_gens) = (classes[ci].rep.clone(), classes[ci].rep_gens.clone());
        let members: HashSet<u32> = rep.iter().copied().collect();
        for e in 0..n as u32 {
            if members.contains(&e) {
                continue;
            }
            let mut gens = rep_gens.clone();
            gens.push(e);
            let set = closure_indices(&t, &gens);
            register(set, &mut seen, &mut classes, &mut queue)?;
        }
    }
    classes.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.rep.cmp(&b.rep)));
    Ok(classes)
}

/// Total number of raw subgroups across all classes.
pub fn total_subgroups(classes: &[SubgroupClass]) -> u64 {
    classes.iter().map(|c| c.class_size).sum()
}

/// Canonical conjugacy-class representative of an element-index subset of
/// `g`: the minimum of its conjugation orbit under the group generators.
/// Matches the representatives chosen by `subgroups_up_to_conjugacy`.
pub fn canonicalize_subgroup(g: &PermGroup, mut set: Vec<u32>) -> Vec<u32> {
    set.sort_unstable();
    let gens: Vec<(crate::groups::perm::Perm, crate::groups::perm::Perm)> = g
        .generators()
        .iter()
        .map(|x| (x.clone(), x.inverse()))
        .collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(set.clone());
    queue.push_back(set.clone());
    let mut best = set;
    while let Some(current) = queue.pop_front() {
        for (gen, gen_inv) in &gens {
            let mut conj: Vec<u32> = current
                .iter()
                .map(|&x| {
                    let y = gen.compose(g.element(x as usize)).compose(gen_inv);
                    g.element_index(&y).expect("conjugate stays inside") as u32
                })
                .collect();
            conj.sort_unstable();
            if seen.insert(conj.clone()) {
                if conj < best {
                    best = conj.clone();
                }
                queue.push_back(conj);
            }
        }
    }
    best
}

/// Materialises a class representative as a `PermGroup`.
pub fn class_to_perm_group(g: &PermGroup, class: &SubgroupClass) -> PermGroup {
    let elements = class.rep.iter().map(|&i| g.element(i as usize).clone()).collect();
    let gens = class.rep_gens.iter().map(|&i| g.element(i as usize).clone()).collect();
    PermGroup::from_elements(g.degree(), elements, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::descriptor::{make_subgroup, SubgroupDescriptor as D};

    const BUDGET: u64 = 1 << 20;

    #[test]
    fn b2_lattice() {
        let b2 = make_subgroup(&D::Full(2), 2).unwrap().to_perm_group(BUDGET).unwrap();
        let classes = subgroups_up_to_conjugacy(&b2, 10_000).unwrap();
        assert_eq!(classes.len(), 8);
        assert_eq!(total_subgroups(&classes), 10);
    }

    #[test]
    fn s4_lattice() {
        let s4 = PermGroup::symmetric(4, BUDGET).unwrap();
        let classes = subgroups_up_to_conjugacy(&s4, 10_000).unwrap();
        // S_4 has 30 subgroups in 11 conjugacy classes.
        assert_eq!(classes.len(), 11);
        assert_eq!(total_subgroups(&classes), 30);
    }

    #[test]
    fn budget_error() {
        let s4 = PermGroup::symmetric(4, BUDGET).unwrap();
        assert!(matches!(
            subgroups_up_to_conjugacy(&s4, 5),
            Err(Error::Budget { .. })
        ));
    }
}

//! Conjugacy classes of a materialised permutation group, by breadth-first
//! conjugation orbits, in a canonical reproducible order.

use std::collections::HashMap;

use crate::groups::perm::{Perm, PermGroup};

/// Conjugacy-class data: representatives (the fingerprint-minimal member of
/// each class), sizes, a total element-to-class map, and the class of the
/// inverses.
#[derive(Clone, Debug)]
pub struct ConjClasses {
    pub reps: Vec<Perm>,
    pub sizes: Vec<u64>,
    /// Class id of each group element, indexed like `PermGroup::elements`.
    pub class_of: Vec<usize>,
    /// `inverse_map[c]` is the class of the inverses of class `c`; an
    /// involution.
    pub inverse_map: Vec<usize>,
    /// Element indices grouped by class.
    pub members: Vec<Vec<u32>>,
}

impl ConjClasses {
    /// Classes as conjugation orbits under the group generators, sorted by
    /// (size ascending, representative fingerprint ascending).
    pub fn compute(g: &PermGroup) -> ConjClasses {
        let n = g.order() as usize;
        let gens: Vec<(Perm, Perm)> = g
            .generators()
            .iter()
            .map(|x| (x.clone(), x.inverse()))
            .collect();
        let mut assigned: Vec<Option<usize>> = vec![None; n];
        let mut orbits: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if assigned[start].is_some() {
                continue;
            }
            let id = orbits.len();
            let mut orbit = vec![start as u32];
            assigned[start] = Some(id);
            let mut i = 0;
            while i < orbit.len() {
                let x = g.element(orbit[i] as usize).clone();
                i += 1;
                for (gen, gen_inv) in &gens {
                    let y = gen.compose(&x).compose(gen_inv);
                    let yi = g.element_index(&y).expect("conjugate stays in the group");
                    if assigned[yi].is_none() {
                        assigned[yi] = Some(id);
                        orbit.push(yi as u32);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        // Canonical order. Elements are fingerprint-sorted, so the first
        // member of each orbit is its minimal representative.
        let mut order: Vec<usize> = (0..orbits.len()).collect();
        order.sort_by_key(|&c| (orbits[c].len(), orbits[c][0]));
        let mut members = Vec::with_capacity(orbits.len());
        let mut class_of = vec![0usize; n];
        for (new_id, &old_id) in order.iter().enumerate() {
            let orbit = &orbits[old_id];
            for &e in orbit {
                class_of[e as usize] = new_id;
            }
            members.push(orbit.clone());
        }
        let reps: Vec<Perm> = members
            .iter()
            .map(|orbit| g.element(orbit[0] as usize).clone())
            .collect();
        let sizes: Vec<u64> = members.iter().map(|o| o.len() as u64).collect();
        let inverse_map: Vec<usize> = reps
            .iter()
            .map(|rep| {
                let inv = rep.inverse();
                class_of[g.element_index(&inv).expect("inverse stays in the group")]
            })
            .collect();
        ConjClasses { reps, sizes, class_of, inverse_map, members }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Index of the class of the identity.
    pub fn identity_class(&self) -> usize {
        self.reps
            .iter()
            .position(Perm::is_identity)
            .expect("identity is always present")
    }

    /// Class id of an arbitrary member element.
    pub fn class_of_perm(&self, g: &PermGroup, x: &Perm) -> Option<usize> {
        g.element_index(x).map(|i| self.class_of[i])
    }

    /// The class-multiplication matrix `A_i` with entries
    /// `(A_i)[j][l] = #{(x,y) in C_i x C_j : x y = z_l}` for the fixed
    /// representatives `z_l`. A class function with central-character values
    /// `w` satisfies `A_i w = w_i w`.
    pub fn class_matrix(&self, g: &PermGroup, i: usize, p: u64) -> crate::char_oracle::modp::MatFp {
        use crate::char_oracle::modp::MatFp;
        let k = self.len();
        let mut m = MatFp::zero(k, p);
        let inverses: HashMap<u32, Perm> = self.members[i]
            .iter()
            .map(|&e| (e, g.element(e as usize).inverse()))
            .collect();
        for (l, z) in self.reps.iter().enumerate() {
            for &x in &self.members[i] {
                let y = inverses[&x].compose(z);
                let j = self.class_of[g.element_index(&y).expect("product stays in the group")];
                let v = m.at(j, l) + 1;
                m.set(j, l, v % p);
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::descriptor::{make_subgroup, SubgroupDescriptor as D};

    const BUDGET: u64 = 1 << 20;

    #[test]
    fn class_counts() {
        let b2 = make_subgroup(&D::Full(2), 2).unwrap().to_perm_group(BUDGET).unwrap();
        assert_eq!(ConjClasses::compute(&b2).len(), 5);
        let b3 = make_subgroup(&D::Full(3), 2).unwrap().to_perm_group(BUDGET).unwrap();
        assert_eq!(ConjClasses::compute(&b3).len(), 10);
        let triv = make_subgroup(&D::Trivial(2), 2).unwrap().to_perm_group(BUDGET).unwrap();
        assert_eq!(ConjClasses::compute(&triv).len(), 1);
    }

    #[test]
    fn sizes_sum_and_inverse_involution() {
        let b3 = make_subgroup(&D::Full(3), 2).unwrap().to_perm_group(BUDGET).unwrap();
        let cls = ConjClasses::compute(&b3);
        assert_eq!(cls.sizes.iter().sum::<u64>(), 48);
        for c in 0..cls.len() {
            assert_eq!(cls.inverse_map[cls.inverse_map[c]], c);
        }
        assert_eq!(cls.sizes[cls.identity_class()], 1);
    }

    #[test]
    fn signed_type_is_complete_invariant_small() {
        // Orbit classes agree with signed cycle types, exhaustively.
        use crate::groups::element::WreathElement;
        for n in 1..=4usize {
            let bn = make_subgroup(&D::Full(n as u32), 2).unwrap();
            let pg = bn.to_perm_group(BUDGET).unwrap();
            let cls = ConjClasses::compute(&pg);
            for (i, x) in pg.elements().iter().enumerate() {
                for (j, y) in pg.elements().iter().enumerate() {
                    let same_class = cls.class_of[i] == cls.class_of[j];
                    let tx = WreathElement::from_embedded(2, n, x).unwrap();
                    let ty = WreathElement::from_embedded(2, n, y).unwrap();
                    let same_type =
                        tx.signed_cycle_type().unwrap() == ty.signed_cycle_type().unwrap();
                    assert_eq!(same_class, same_type);
                }
            }
        }
    }
}

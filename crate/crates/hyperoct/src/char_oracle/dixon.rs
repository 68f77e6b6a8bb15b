//! Exact character tables by Dixon's method: simultaneous eigenvectors of
//! class-multiplication matrices over a prime field `F_p` with
//! `p ≡ 1 (mod exponent)` and `p > 2|G|`.

use crate::char_oracle::classes::ConjClasses;
use crate::char_oracle::modp::{self, MatFp};
use crate::groups::perm::PermGroup;
use crate::{Error, Result};

/// Exact character table of a materialised group: irreducible character
/// values as residues modulo the published prime, with exact integer
/// degrees. Rows are sorted by (degree, residue vector); columns follow the
/// canonical class order.
#[derive(Clone, Debug)]
pub struct CharTable {
    pub order: u64,
    pub prime: u64,
    pub classes: ConjClasses,
    pub degrees: Vec<u64>,
    pub rows: Vec<Vec<u64>>,
}

impl CharTable {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// The row of the trivial character.
    pub fn trivial_row(&self) -> usize {
        self.rows
            .iter()
            .position(|row| row.iter().all(|&v| v == 1))
            .expect("every group has a trivial character")
    }

    /// Lifts a residue to the unique integer of absolute value `< p/2`.
    pub fn lift(&self, residue: u64) -> i64 {
        if residue <= (self.prime - 1) / 2 {
            residue as i64
        } else {
            residue as i64 - self.prime as i64
        }
    }
}

/// The prime used for a group (and all its subgroups' fused computations):
/// smallest `p ≡ 1 (mod m)` with `p > 2|G|`, where `m` is the exponent
/// datum (for a pair `(G, K)`, the lcm of the two exponents).
pub fn select_prime(exponent: u64, order: u64, search_bound: u64) -> Result<u64> {
    modp::find_prime(exponent, 2 * order, search_bound)
}

/// Computes the character table of `g` over the given prime, which must
/// satisfy `p ≡ 1 (mod exponent(g))` and `p > 2|g|`.
pub fn character_table(g: &PermGroup, prime: u64) -> Result<CharTable> {
    let classes = ConjClasses::compute(g);
    character_table_with_classes(g, classes, prime)
}

pub fn character_table_with_classes(
    g: &PermGroup,
    classes: ConjClasses,
    prime: u64,
) -> Result<CharTable> {
    let order = g.order();
    if prime <= 2 * order || (prime - 1) % g.exponent() != 0 {
        return Err(Error::InvalidArgument(format!(
            "prime {prime} is unsuitable for a group of order {order} and exponent {}",
            g.exponent()
        )));
    }
    let k = classes.len();
    let p = prime;

    // Split the space of class functions into common eigenspaces of the
    // class matrices, taken in ascending class order.
    let mut subspaces: Vec<(Vec<Vec<u64>>, Vec<usize>)> = {
        let mut id = Vec::with_capacity(k);
        for i in 0..k {
            let mut row = vec![0u64; k];
            row[i] = 1;
            id.push(row);
        }
        let pivots = (0..k).collect();
        vec![(id, pivots)]
    };
    for class_idx in 0..k {
        if subspaces.iter().all(|(b, _)| b.len() == 1) {
            break;
        }
        let a = classes.class_matrix(g, class_idx, p);
        let mut next = Vec::with_capacity(subspaces.len());
        for (basis, pivots) in subspaces {
            if basis.len() == 1 {
                next.push((basis, pivots));
                continue;
            }
            // Restriction of `a` to the invariant subspace, in basis
            // coordinates: columns are the coordinates of a*v_j.
            let m = basis.len();
            let mut restricted = MatFp::zero(m, p);
            for (j, v) in basis.iter().enumerate() {
                let image = a.matvec(v);
                let coords = modp::coords_in_basis(&image, &basis, &pivots, p).ok_or_else(|| {
                    Error::Consistency("class matrix does not preserve an eigenspace".into())
                })?;
                for (i, c) in coords.into_iter().enumerate() {
                    restricted.set(i, j, c);
                }
            }
            let poly = restricted.char_poly();
            for root in modp::poly_roots(&poly, p) {
                // Kernel of (restricted - root I), back in ambient
                // coordinates.
                let mut shifted = vec![vec![0u64; m]; m];
                for i in 0..m {
                    for j in 0..m {
                        shifted[i][j] = restricted.at(i, j);
                    }
                    shifted[i][i] = modp::subm(shifted[i][i], root, p);
                }
                let kernel = modp::nullspace(&shifted, p);
                let mut lifted: Vec<Vec<u64>> = kernel
                    .iter()
                    .map(|coeffs| {
                        let mut w = vec![0u64; k];
                        for (c, v) in coeffs.iter().zip(&basis) {
                            for (slot, x) in w.iter_mut().zip(v) {
                                *slot = modp::addm(*slot, modp::mulm(*c, *x, p), p);
                            }
                        }
                        w
                    })
                    .collect();
                let piv = modp::rref(&mut lifted, p);
                next.push((lifted, piv));
            }
        }
        subspaces = next;
    }
    if subspaces.len() != k || subspaces.iter().any(|(b, _)| b.len() != 1) {
        return Err(Error::Consistency(format!(
            "class-matrix eigenspaces did not fully split: {} spaces for {k} classes",
            subspaces.len()
        )));
    }

    // Each 1-dimensional space holds the central-character vector
    // w_l = h_l chi(g_l) / d. Normalize by the identity coordinate.
    let id_class = classes.identity_class();
    let order_mod = order % p;
    let mut table: Vec<(u64, Vec<u64>)> = Vec::with_capacity(k);
    for (basis, _) in subspaces {
        let raw = &basis[0];
        let scale = modp::invm(raw[id_class], p);
        let w: Vec<u64> = raw.iter().map(|&x| modp::mulm(x, scale, p)).collect();
        // d^2 = |G| / sum_l w_l w_{l*} / h_l
        let mut s = 0u64;
        for l in 0..k {
            let term = modp::mulm(
                modp::mulm(w[l], w[classes.inverse_map[l]], p),
                modp::invm(classes.sizes[l] % p, p),
                p,
            );
            s = modp::addm(s, term, p);
        }
        let d_squared = modp::mulm(order_mod, modp::invm(s, p), p);
        let degree = (1..=order)
            .filter(|d| order % d == 0)
            .find(|&d| modp::mulm(d % p, d % p, p) == d_squared)
            .ok_or_else(|| {
                Error::Consistency("no divisor of |G| matches the degree square".into())
            })?;
        let row: Vec<u64> = (0..k)
            .map(|l| {
                modp::mulm(
                    modp::mulm(degree % p, w[l], p),
                    modp::invm(classes.sizes[l] % p, p),
                    p,
                )
            })
            .collect();
        table.push((degree, row));
    }
    table.sort();
    let degrees: Vec<u64> = table.iter().map(|(d, _)| *d).collect();
    let rows: Vec<Vec<u64>> = table.into_iter().map(|(_, r)| r).collect();

    let out = CharTable { order, prime, classes, degrees, rows };
    verify_table(&out)?;
    Ok(out)
}

/// Internal invariants: degree-square sum and both orthogonality relations
/// modulo p.
fn verify_table(t: &CharTable) -> Result<()> {
    let p = t.prime;
    let k = t.num_classes();
    let sum_sq: u64 = t
        .degrees
        .iter()
        .map(|&d| {
            if d >= p || d.checked_mul(d).is_none() {
                u64::MAX
            } else {
                d * d
            }
        })
        .fold(0u64, u64::saturating_add);
    if sum_sq != t.order {
        return Err(Error::Consistency(format!(
            "degree squares sum to {sum_sq}, group order is {}",
            t.order
        )));
    }
    let order_mod = t.order % p;
    for a in 0..k {
        for b in 0..k {
            let mut acc = 0u64;
            for l in 0..k {
                let term = modp::mulm(
                    modp::mulm(t.classes.sizes[l] % p, t.rows[a][l], p),
                    t.rows[b][t.classes.inverse_map[l]],
                    p,
                );
                acc = modp::addm(acc, term, p);
            }
            let expected = if a == b { order_mod } else { 0 };
            if acc != expected {
                return Err(Error::Consistency(format!(
                    "row orthogonality fails at rows {a}, {b}"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::descriptor::{make_subgroup, SubgroupDescriptor as D};

    const BUDGET: u64 = 1 << 20;

    fn table_of(d: &D) -> CharTable {
        let g = make_subgroup(d, 2).unwrap().to_perm_group(BUDGET).unwrap();
        let p = select_prime(g.exponent(), g.order(), 1 << 40).unwrap();
        character_table(&g, p).unwrap()
    }

    #[test]
    fn b2_degrees() {
        let t = table_of(&D::Full(2));
        assert_eq!(t.degrees, vec![1, 1, 1, 1, 2]);
        assert_eq!(t.prime, 17);
    }

    #[test]
    fn h2_is_cyclic_of_order_4() {
        let t = table_of(&D::Hn(2));
        assert_eq!(t.degrees, vec![1, 1, 1, 1]);
    }

    #[test]
    fn b3_degrees() {
        // dim S^{lambda,mu} = binom(3,|mu|) f^lambda f^mu over the ten
        // labels; B_3 = Z/2 x S_4 doubles the S_4 degree multiset.
        let t = table_of(&D::Full(3));
        assert_eq!(t.degrees, vec![1, 1, 1, 1, 2, 2, 3, 3, 3, 3]);
        let mut expected: Vec<u64> = crate::bn_theory::all_labels(3)
            .iter()
            .map(|l| {
                u64::try_from(crate::bn_theory::dim_bn(l)).expect("small dimension")
            })
            .collect();
        expected.sort_unstable();
        assert_eq!(t.degrees, expected);
    }

    #[test]
    fn s4_degrees() {
        let g = PermGroup::symmetric(4, BUDGET).unwrap();
        let p = select_prime(g.exponent(), g.order(), 1 << 40).unwrap();
        let t = character_table(&g, p).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 2, 3, 3]);
    }

    #[test]
    fn trivial_group() {
        let t = table_of(&D::Trivial(1));
        assert_eq!(t.degrees, vec![1]);
        assert_eq!(t.rows, vec![vec![1]]);
    }
}

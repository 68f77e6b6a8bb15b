//! Littlewood–Richardson coefficients by direct tableau backtracking, and
//! iterated LR products for inductions from Young subgroups.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combinatorics::{partitions_of, Composition, Partition};
use crate::{Error, Result};

/// The Littlewood–Richardson coefficient `c^{outer}_{inner, weight}`: the
/// number of LR skew tableaux of shape `outer/inner` and content `weight`.
/// Zero when the sizes do not add up or `inner` is not contained in `outer`.
/// Symmetric in `(inner, weight)`.
pub fn lr_coefficient(outer: &Partition, inner: &Partition, weight: &Partition) -> BigUint {
    if inner.size() + weight.size() != outer.size() || !inner.contained_in(outer) {
        return BigUint::zero();
    }
    if weight.is_empty() {
        return BigUint::one();
    }
    // Cells of the skew shape in reverse reading order: rows top to bottom,
    // within a row right to left. Reading the filling in this order must give
    // a lattice word, which we enforce incrementally.
    let rows = outer.len();
    let mut cells = Vec::new();
    for r in 0..rows {
        let lo = inner.part(r);
        let hi = outer.part(r);
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    let nvals = weight.len();
    let mut counts = vec![0u32; nvals];
    // filling[r] holds the values of row r at columns inner_r..outer_r.
    let mut filling: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0; (outer.part(r) - inner.part(r)) as usize])
        .collect();
    let mut total = BigUint::zero();

    fn value_at(
        filling: &[Vec<u32>],
        inner: &Partition,
        r: usize,
        c: u32,
    ) -> Option<u32> {
        let lo = inner.part(r);
        if c < lo {
            return None; // inner cell, empty
        }
        let v = *filling.get(r)?.get((c - lo) as usize)?;
        if v == 0 {
            None
        } else {
            Some(v)
        }
    }

    fn rec(
        idx: usize,
        cells: &[(usize, u32)],
        inner: &Partition,
        weight: &Partition,
        counts: &mut [u32],
        filling: &mut Vec<Vec<u32>>,
        total: &mut BigUint,
    ) {
        if idx == cells.len() {
            *total += 1u32;
            return;
        }
        let (r, c) = cells[idx];
        for v in 1..=weight.len() as u32 {
            let vi = (v - 1) as usize;
            if counts[vi] >= weight.part(vi) {
                continue;
            }
            // Lattice word: after placing v, #v must not exceed #(v-1).
            if v > 1 && counts[vi] + 1 > counts[vi - 1] {
                continue;
            }
            // Weak increase along rows (left to right): the right neighbour
            // was filled earlier in this order.
            if let Some(right) = value_at(filling, inner, r, c + 1) {
                if v > right {
                    continue;
                }
            }
            // Strict increase down columns.
            if r > 0 && c >= inner.part(r - 1) {
                match value_at(filling, inner, r - 1, c) {
                    Some(above) if above >= v => continue,
                    _ => {}
                }
            }
            counts[vi] += 1;
            filling[r][(c - inner.part(r)) as usize] = v;
            rec(idx + 1, cells, inner, weight, counts, filling, total);
            filling[r][(c - inner.part(r)) as usize] = 0;
            counts[vi] -= 1;
        }
    }

    rec(0, &cells, inner, weight, &mut counts, &mut filling, &mut total);
    total
}

/// Expands the LR product `S^base * S^factor` inside `S_{|base|+|factor|}`:
/// returns the map `nu -> c^{nu}_{base, factor}` over partitions with
/// positive coefficient, in canonical order.
pub fn lr_expand(base: &Partition, factor: &Partition) -> BTreeMap<Partition, BigUint> {
    let mut out = BTreeMap::new();
    for nu in partitions_of(base.size() + factor.size()) {
        let c = lr_coefficient(&nu, base, factor);
        if !c.is_zero() {
            out.insert(nu, c);
        }
    }
    out
}

/// Multiplicity of the Specht label `target` in the induction from the Young
/// subgroup `S(a)` of the outer product of the `factors`, computed by
/// iterated LR products.
pub fn induced_multiplicity_sym(
    a: &Composition,
    factors: &[Partition],
    target: &Partition,
) -> Result<BigUint> {
    if a.parts.len() != factors.len() {
        return Err(Error::SizeMismatch(format!(
            "composition has {} parts but {} factors were given",
            a.parts.len(),
            factors.len()
        )));
    }
    for (i, (sz, f)) in a.parts.iter().zip(factors).enumerate() {
        if f.size() != *sz {
            return Err(Error::SizeMismatch(format!(
                "factor {i} is a partition of {} but the composition part is {sz}",
                f.size()
            )));
        }
    }
    if a.total() != target.size() {
        return Err(Error::SizeMismatch(format!(
            "composition totals {} but target has size {}",
            a.total(),
            target.size()
        )));
    }
    let mut current: BTreeMap<Partition, BigUint> = BTreeMap::new();
    current.insert(Partition::empty(), BigUint::one());
    for f in factors {
        if f.is_empty() {
            continue;
        }
        let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for (pi, mult) in &current {
            for (nu, c) in lr_expand(pi, f) {
                *next.entry(nu).or_insert_with(BigUint::zero) += mult * c;
            }
        }
        current = next;
    }
    Ok(current.remove(target).unwrap_or_else(BigUint::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::StripOrientation;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2u32.into());
        assert_eq!(
            lr_coefficient(&p(&[4, 3, 2, 1]), &p(&[3, 2, 1]), &p(&[3, 1])),
            3u32.into()
        );
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[1])), 1u32.into());
        assert_eq!(lr_coefficient(&p(&[1, 1]), &p(&[2]), &p(&[1])), 0u32.into());
    }

    #[test]
    fn lr_symmetric_small() {
        for n in 0..=8u32 {
            for nu in partitions_of(n) {
                for k in 0..=n {
                    for lam in partitions_of(k) {
                        for mu in partitions_of(n - k) {
                            assert_eq!(
                                lr_coefficient(&nu, &lam, &mu),
                                lr_coefficient(&nu, &mu, &lam),
                                "asymmetry at nu={nu} lam={lam} mu={mu}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn strips_agree_with_lr() {
        for n in 0..=7u32 {
            for lam in partitions_of(n) {
                let boxes: Vec<_> = partitions_of(n + 1)
                    .into_iter()
                    .filter(|nu| lr_coefficient(nu, &lam, &p(&[1])) == 1u32.into())
                    .collect();
                assert_eq!(lam.add_strip(1, StripOrientation::Horizontal), boxes);
                let horiz: Vec<_> = partitions_of(n + 2)
                    .into_iter()
                    .filter(|nu| lr_coefficient(nu, &lam, &p(&[2])) == 1u32.into())
                    .collect();
                assert_eq!(lam.add_strip(2, StripOrientation::Horizontal), horiz);
                let vert: Vec<_> = partitions_of(n + 2)
                    .into_iter()
                    .filter(|nu| lr_coefficient(nu, &lam, &p(&[1, 1])) == 1u32.into())
                    .collect();
                assert_eq!(lam.add_strip(2, StripOrientation::Vertical), vert);
            }
        }
    }

    #[test]
    fn induced_multiplicity_examples() {
        let m = induced_multiplicity_sym(
            &Composition::new(vec![2, 2]),
            &[p(&[2]), p(&[2])],
            &p(&[2, 2]),
        )
        .unwrap();
        assert_eq!(m, 1u32.into());
        let m = induced_multiplicity_sym(
            &Composition::new(vec![3, 3]),
            &[p(&[2, 1]), p(&[2, 1])],
            &p(&[3, 2, 1]),
        )
        .unwrap();
        assert_eq!(m, 2u32.into());
        let m = induced_multiplicity_sym(&Composition::new(vec![4]), &[p(&[4])], &p(&[4])).unwrap();
        assert_eq!(m, 1u32.into());
        assert!(induced_multiplicity_sym(&Composition::new(vec![2]), &[p(&[1])], &p(&[2])).is_err());
    }

    #[test]
    fn johnson_decomposition() {
        // ind from S_{n-h} x S_h of trivial ⊠ trivial decomposes with
        // multiplicity one into two-row shapes (n-j, j), j = 0..h.
        let n = 6u32;
        let h = 3u32;
        for nu in partitions_of(n) {
            let m = induced_multiplicity_sym(
                &Composition::new(vec![n - h, h]),
                &[p(&[n - h]), p(&[h])],
                &nu,
            )
            .unwrap();
            let expected: BigUint = if nu.len() <= 2 && nu.part(1) <= h { 1u32 } else { 0u32 }.into();
            assert_eq!(m, expected, "at {nu}");
        }
    }
}

//! Symmetric-group character values (Murnaghan–Nakayama recursion over
//! beta-sets) and Specht-module dimensions (hook lengths).

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combinatorics::Partition;
use crate::{Error, Result};

/// The character value `chi^p` of `S_n` at the class of the given cycle
/// type. Both partitions must have the same size.
pub fn sym_char_value(p: &Partition, cycle_type: &Partition) -> Result<BigInt> {
    if p.size() != cycle_type.size() {
        return Err(Error::SizeMismatch(format!(
            "character label has size {} but cycle type has size {}",
            p.size(),
            cycle_type.size()
        )));
    }
    let mut memo = HashMap::new();
    Ok(mn_recurse(&beta_set(p), cycle_type.parts(), &mut memo))
}

/// Beta-set of a partition: the strictly decreasing first-column hook
/// lengths `p_i + (len - i)`, padded with trailing `len-1, ..., 0` slots.
fn beta_set(p: &Partition) -> Vec<u32> {
    let len = p.len() as u32;
    (0..len).map(|i| p.part(i as usize) + (len - 1 - i)).collect()
}

/// Murnaghan–Nakayama over beta-sets: removing a border strip of length `l`
/// replaces a beta number `b` by `b - l` (when free); the sign is the parity
/// of the number of beta numbers strictly between them.
fn mn_recurse(beta: &[u32], cycles: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), BigInt>) -> BigInt {
    if cycles.is_empty() {
        return BigInt::one();
    }
    let key = (beta.to_vec(), cycles.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let l = cycles[0];
    let rest = &cycles[1..];
    let mut total = BigInt::zero();
    for (i, &b) in beta.iter().enumerate() {
        if b < l {
            continue;
        }
        let target = b - l;
        if beta.contains(&target) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x < b && x > target).count();
        let mut next: Vec<u32> = beta.to_vec();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sub = mn_recurse(&next, rest, memo);
        if crossed % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Number of standard Young tableaux of shape `p`, by the hook length
/// formula.
pub fn dimension_sym(p: &Partition) -> BigUint {
    let n = p.size();
    let mut numerator = BigUint::one();
    for k in 1..=n {
        numerator *= BigUint::from(k);
    }
    let conj = p.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in p.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.part(j as usize) - i as u32 - 1;
            hooks *= BigUint::from(arm + leg + 1);
        }
    }
    numerator / hooks
}

/// Order of the `S_n` centralizer of the class with the given cycle type:
/// `prod_i i^{m_i} m_i!`.
pub fn cycle_type_centralizer(cycle_type: &Partition) -> BigUint {
    let mut mult: HashMap<u32, u32> = HashMap::new();
    for &part in cycle_type.parts() {
        *mult.entry(part).or_insert(0) += 1;
    }
    let mut z = BigUint::one();
    for (part, m) in mult {
        for _ in 0..m {
            z *= BigUint::from(part);
        }
        for k in 1..=m {
            z *= BigUint::from(k);
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn char_examples() {
        // trivial character
        for ct in partitions_of(4) {
            assert_eq!(sym_char_value(&p(&[4]), &ct).unwrap(), 1.into());
        }
        // sign of a 3-cycle
        assert_eq!(sym_char_value(&p(&[1, 1, 1]), &p(&[3])).unwrap(), 1.into());
        // the 2-dimensional S_3 character at the identity
        assert_eq!(sym_char_value(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2.into());
        assert_eq!(sym_char_value(&p(&[2, 1]), &p(&[3])).unwrap(), (-1).into());
        assert_eq!(sym_char_value(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0.into());
    }

    #[test]
    fn dims() {
        assert_eq!(dimension_sym(&p(&[5])), 1u32.into());
        assert_eq!(dimension_sym(&p(&[2, 1])), 2u32.into());
        assert_eq!(dimension_sym(&p(&[3, 2, 1])), 16u32.into());
        assert_eq!(dimension_sym(&Partition::empty()), 1u32.into());
    }

    #[test]
    fn dimension_squares_sum_to_factorial() {
        let mut fact = BigUint::one();
        for n in 1..=8u32 {
            fact *= BigUint::from(n);
            let total: BigUint = partitions_of(n)
                .iter()
                .map(|lam| {
                    let d = dimension_sym(lam);
                    &d * &d
                })
                .sum();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn identity_class_is_dimension() {
        for n in 0..=7u32 {
            let id_type = Partition::new(vec![1; n as usize]).unwrap();
            for lam in partitions_of(n) {
                assert_eq!(
                    sym_char_value(&lam, &id_type).unwrap(),
                    BigInt::from(dimension_sym(&lam))
                );
            }
        }
    }

    #[test]
    fn row_orthogonality() {
        // sum over classes of chi^lam * chi^mu / z_type = delta_{lam,mu}
        for n in 1..=7u32 {
            let classes = partitions_of(n);
            let mut group_order = BigUint::one();
            for k in 1..=n {
                group_order *= BigUint::from(k);
            }
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    // Clear denominators: sum |class| * chi * chi = |G| delta.
                    let mut acc = BigInt::zero();
                    for ct in &classes {
                        let size = BigInt::from(&group_order / cycle_type_centralizer(ct));
                        acc += size
                            * sym_char_value(&lam, ct).unwrap()
                            * sym_char_value(&mu, ct).unwrap();
                    }
                    let expected = if lam == mu {
                        BigInt::from(group_order.clone())
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(acc, expected, "n={n} lam={lam} mu={mu}");
                }
            }
        }
    }
}

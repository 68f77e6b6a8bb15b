//! The projection gate: for `n >= 7`, a strong Gelfand subgroup of `B_n`
//! must project onto one of four permutation groups.

use serde::{Deserialize, Serialize};

use crate::groups::perm::PermGroup;
use crate::groups::subgroup::Subgroup;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GateOutcome {
    Pass,
    /// The projection is not one of `S_n`, `A_n`, `S_{n-1} x S_1`,
    /// `S_{n-2} x S_2` up to coordinate relabelling.
    Reject { reason: String },
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Identifies the projection image up to coordinate relabelling.
///
/// Order plus point-orbit sizes suffice: an order-`n!` subgroup of `S_n` is
/// `S_n`; an order-`n!/2` subgroup is its unique index-2 subgroup `A_n`; a
/// group of order `(n-1)!` with orbits `{1, n-1}` acts faithfully and fully
/// on the big orbit; a group of order `2(n-2)!` with orbits `{2, n-2}`
/// fills the whole Young subgroup.
pub fn classify_gamma(gamma: &PermGroup) -> Option<String> {
    let n = gamma.degree() as u64;
    let order = gamma.order();
    let mut orbit_sizes: Vec<usize> = gamma.point_orbits().iter().map(Vec::len).collect();
    orbit_sizes.sort_unstable();
    if order == factorial(n) {
        return Some("S_n".into());
    }
    if n >= 2 && order == factorial(n) / 2 {
        return Some("A_n".into());
    }
    if n >= 2 && order == factorial(n - 1) && orbit_sizes == [1, n as usize - 1] {
        return Some("S_{n-1} x S_1".into());
    }
    if n >= 4 && order == 2 * factorial(n - 2) && orbit_sizes == [2, n as usize - 2] {
        return Some("S_{n-2} x S_2".into());
    }
    None
}

/// For `n >= 7`, rejects subgroups whose projection lies outside the four
/// admissible images; below 7 the gate does not apply and always passes.
pub fn gamma_gate(k: &Subgroup, budget: u64) -> Result<GateOutcome> {
    if k.n < 7 {
        return Ok(GateOutcome::Pass);
    }
    let gamma = k.gamma(budget)?;
    match classify_gamma(&gamma) {
        Some(_) => Ok(GateOutcome::Pass),
        None => {
            let orbit_sizes: Vec<usize> = gamma.point_orbits().iter().map(Vec::len).collect();
            Ok(GateOutcome::Reject {
                reason: format!(
                    "projection has order {} with point orbits {:?}; not S_n, A_n, S_(n-1) x S_1 or S_(n-2) x S_2",
                    gamma.order(),
                    orbit_sizes
                ),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::descriptor::{make_subgroup, SubgroupDescriptor as D};

    const BUDGET: u64 = 1 << 22;

    #[test]
    fn gate_examples() {
        // n = 8, gamma = S_5 x S_3: reject.
        let d = D::Product(Box::new(D::PassiveSn(5)), Box::new(D::PassiveSn(3)));
        let k = make_subgroup(&d, 2).unwrap();
        assert!(matches!(gamma_gate(&k, BUDGET).unwrap(), GateOutcome::Reject { .. }));
        // n = 8, gamma = A_8: pass.
        let k = make_subgroup(&D::PassiveAn(8), 2).unwrap();
        assert_eq!(gamma_gate(&k, BUDGET).unwrap(), GateOutcome::Pass);
        // n = 4: the gate is inactive.
        let d = D::Product(Box::new(D::PassiveSn(2)), Box::new(D::PassiveSn(2)));
        let k = make_subgroup(&d, 2).unwrap();
        assert_eq!(gamma_gate(&k, BUDGET).unwrap(), GateOutcome::Pass);
    }

    #[test]
    fn classify_images() {
        let k = make_subgroup(&D::DiagFSn(7), 2).unwrap();
        assert_eq!(classify_gamma(&k.gamma(BUDGET).unwrap()).unwrap(), "S_n");
        let k = make_subgroup(&D::PassiveAn(7), 2).unwrap();
        assert_eq!(classify_gamma(&k.gamma(BUDGET).unwrap()).unwrap(), "A_n");
        let d = D::Product(Box::new(D::PassiveSn(6)), Box::new(D::Trivial(1)));
        let k = make_subgroup(&d, 2).unwrap();
        assert_eq!(classify_gamma(&k.gamma(BUDGET).unwrap()).unwrap(), "S_{n-1} x S_1");
        let d = D::Product(Box::new(D::DiagFSn(5)), Box::new(D::Hn(2)));
        let k = make_subgroup(&d, 2).unwrap();
        assert_eq!(classify_gamma(&k.gamma(BUDGET).unwrap()).unwrap(), "S_{n-2} x S_2");
    }
}

//! Linear character evaluation on wreath elements, as root-of-unity
//! exponents.

use serde::{Deserialize, Serialize};

use crate::bn_theory::LinearChar;
use crate::groups::element::WreathElement;
use crate::{Error, Result};

/// A root of unity `zeta_order ^ exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootOfUnity {
    pub order: u32,
    pub exponent: u32,
}

impl RootOfUnity {
    pub fn one(order: u32) -> Self {
        RootOfUnity { order, exponent: 0 }
    }

    pub fn is_one(&self) -> bool {
        self.exponent % self.order == 0
    }

    /// The value as a sign, when the order divides 2 after reduction.
    pub fn as_sign(&self) -> Option<i32> {
        match (2 * self.exponent) % self.order {
            0 if self.exponent % self.order == 0 => Some(1),
            0 => Some(-1),
            _ => None,
        }
    }
}

/// A linear character together with its domain: the four characters of
/// `B_n` (with `delta` generalised to `zeta_r^(sum f)` for any `r`), or the
/// named characters of the order-4 subgroups of `B_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnyChar {
    Bn(LinearChar),
    /// `chi_1, chi_2, chi_3` of `D_2`: kernels `diag(F)`, the passive
    /// `S_2`, and its conjugate, in that order.
    D2Chi(u8),
    /// `chi_k` of the cyclic `H_2 = <(e_1, (1 2))>`: the generator maps to
    /// `i^k`; `chi_2` is the unique order-2 character.
    H2Chi(u8),
}

/// Evaluates a linear character at a wreath element of its domain.
pub fn linear_char_value(chi: AnyChar, x: &WreathElement) -> Result<RootOfUnity> {
    let eps_exp = |x: &WreathElement| u32::from(x.sigma.sign() < 0);
    match chi {
        AnyChar::Bn(LinearChar::One) => Ok(RootOfUnity::one(1)),
        AnyChar::Bn(LinearChar::Eps) => Ok(RootOfUnity { order: 2, exponent: eps_exp(x) }),
        AnyChar::Bn(LinearChar::Delta) => {
            Ok(RootOfUnity { order: x.r, exponent: x.residue_sum() })
        }
        AnyChar::Bn(LinearChar::EpsDelta) => {
            if x.r != 2 {
                return Err(Error::InvalidArgument(
                    "eps*delta needs r = 2 (eps and delta have different orders otherwise)".into(),
                ));
            }
            Ok(RootOfUnity { order: 2, exponent: (eps_exp(x) + x.residue_sum()) % 2 })
        }
        AnyChar::D2Chi(i) => {
            if x.r != 2 || x.n() != 2 || x.flip_count() % 2 != 0 {
                return Err(Error::InvalidArgument(format!("{x:?} is not in D_2")));
            }
            let flip = u32::from(x.f[0] != 0);
            let exponent = match i {
                1 => eps_exp(x),
                2 => flip,
                3 => (eps_exp(x) + flip) % 2,
                _ => return Err(Error::InvalidArgument(format!("no D_2 character chi_{i}"))),
            };
            Ok(RootOfUnity { order: 2, exponent })
        }
        AnyChar::H2Chi(k) => {
            if k == 0 || k > 3 {
                return Err(Error::InvalidArgument(format!("no H_2 character chi_{k}")));
            }
            if x.r != 2 || x.n() != 2 {
                return Err(Error::InvalidArgument(format!("{x:?} is not in H_2")));
            }
            let u_power = match (x.f[0], x.f[1], x.sigma.is_identity()) {
                (0, 0, true) => 0u32,
                (1, 0, false) => 1,
                (1, 1, true) => 2,
                (0, 1, false) => 3,
                _ => return Err(Error::InvalidArgument(format!("{x:?} is not in H_2"))),
            };
            Ok(RootOfUnity { order: 4, exponent: (u_power * k as u32) % 4 })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::perm::Perm;

    fn el(r: u32, f: &[u8], cycles: &[&[u8]]) -> WreathElement {
        WreathElement::new(r, f.to_vec(), Perm::from_cycles(f.len(), cycles).unwrap()).unwrap()
    }

    #[test]
    fn paper_defining_values() {
        // delta(t) = -1, eps(s_i) = -1, eps(t) = +1, delta(s_i) = +1.
        let t = el(2, &[1, 0, 0], &[]);
        let s1 = el(2, &[0, 0, 0], &[&[0, 1]]);
        assert_eq!(linear_char_value(AnyChar::Bn(LinearChar::Delta), &t).unwrap().as_sign(), Some(-1));
        assert_eq!(linear_char_value(AnyChar::Bn(LinearChar::Eps), &t).unwrap().as_sign(), Some(1));
        assert_eq!(linear_char_value(AnyChar::Bn(LinearChar::Eps), &s1).unwrap().as_sign(), Some(-1));
        assert_eq!(linear_char_value(AnyChar::Bn(LinearChar::Delta), &s1).unwrap().as_sign(), Some(1));
    }

    #[test]
    fn d2_chi2_excludes_central_flip() {
        let z = el(2, &[1, 1], &[]);
        let v = linear_char_value(AnyChar::D2Chi(2), &z).unwrap();
        assert_eq!(v.as_sign(), Some(-1));
        // chi_2 is trivial on the passive S_2.
        let s = el(2, &[0, 0], &[&[0, 1]]);
        assert_eq!(linear_char_value(AnyChar::D2Chi(2), &s).unwrap().as_sign(), Some(1));
        // Domain check: an odd-flip element is rejected.
        assert!(linear_char_value(AnyChar::D2Chi(2), &el(2, &[1, 0], &[])).is_err());
    }

    #[test]
    fn h2_chi1_has_order_4() {
        let u = el(2, &[1, 0], &[&[0, 1]]);
        let v = linear_char_value(AnyChar::H2Chi(1), &u).unwrap();
        assert_eq!((v.order, v.exponent), (4, 1));
        let v2 = linear_char_value(AnyChar::H2Chi(2), &u).unwrap();
        assert_eq!(v2.as_sign(), Some(-1));
    }
}
